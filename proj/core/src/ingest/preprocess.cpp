#include "hcrag/ingest/preprocess.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace hcrag::ingest {

namespace {

const char* const kStopwords[] = {
#include "stopwords_data.inc"
};

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

// Removes stop-word alphanumeric runs from a token while keeping its
// periods, so "1.1" survives and "the." reduces to ".".
std::string strip_stopword_runs(const std::string& token) {
    std::string out;
    std::size_t i = 0;
    while (i < token.size()) {
        if (is_word_char(token[i])) {
            std::size_t start = i;
            while (i < token.size() && is_word_char(token[i])) ++i;
            std::string run = token.substr(start, i - start);
            if (!is_stopword(run)) out += run;
        } else {
            out.push_back(token[i]);
            ++i;
        }
    }
    return out;
}

}  // namespace

const std::set<std::string>& stopword_set() {
    static const std::set<std::string> words(std::begin(kStopwords), std::end(kStopwords));
    return words;
}

bool is_stopword(std::string_view word) {
    return stopword_set().count(std::string(word)) > 0;
}

std::string preprocess(std::string_view text) {
    // Pass 1: lowercase and map everything outside [a-z0-9.\n] to a space.
    std::string mapped;
    mapped.reserve(text.size());
    for (unsigned char c : text) {
        if (c >= 'A' && c <= 'Z') {
            mapped.push_back(static_cast<char>(c - 'A' + 'a'));
        } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '.' || c == '\n') {
            mapped.push_back(static_cast<char>(c));
        } else {
            mapped.push_back(' ');
        }
    }

    // Pass 2: per line, drop stop words and collapse space runs.
    std::string result;
    result.reserve(mapped.size());
    std::size_t line_start = 0;
    bool first_line = true;
    while (line_start <= mapped.size()) {
        std::size_t line_end = mapped.find('\n', line_start);
        const bool last_line = line_end == std::string::npos;
        if (last_line) line_end = mapped.size();

        std::string line_out;
        std::size_t i = line_start;
        while (i < line_end) {
            if (mapped[i] == ' ') {
                ++i;
                continue;
            }
            std::size_t token_start = i;
            while (i < line_end && mapped[i] != ' ') ++i;
            std::string token =
                strip_stopword_runs(mapped.substr(token_start, i - token_start));
            if (token.empty()) continue;
            if (!line_out.empty()) line_out.push_back(' ');
            line_out += token;
        }

        if (!first_line) result.push_back('\n');
        result += line_out;
        first_line = false;
        if (last_line) break;
        line_start = line_end + 1;
    }
    return result;
}

}  // namespace hcrag::ingest
