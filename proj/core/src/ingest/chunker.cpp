#include "hcrag/ingest/chunker.hpp"

#include <sstream>

#include "hcrag/common/errors.hpp"

namespace hcrag::ingest {

void ChunkingConfig::validate() const {
    if (chunk_tokens < 1) throw ValidationError("chunkTokens must be positive");
    if (overlap_tokens < 0) throw ValidationError("overlapTokens must be non-negative");
    if (overlap_tokens >= chunk_tokens) {
        throw ValidationError("overlapTokens must be smaller than chunkTokens");
    }
}

std::vector<std::string> tokenize_whitespace(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t' ||
                                   text[i] == '\r')) {
            ++i;
        }
        if (i >= text.size()) break;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\n' && text[i] != '\t' &&
               text[i] != '\r') {
            ++i;
        }
        tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

namespace {

std::string join_tokens(const std::vector<std::string>& tokens, std::size_t begin,
                        std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
        if (i > begin) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

// Sentences end at '.' (kept) or newline (dropped); empty segments are
// skipped.
std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    std::string current;
    auto flush = [&]() {
        std::size_t begin = current.find_first_not_of(' ');
        if (begin == std::string::npos) {
            current.clear();
            return;
        }
        std::size_t last = current.find_last_not_of(' ');
        std::string trimmed = current.substr(begin, last - begin + 1);
        if (trimmed != "." && !trimmed.empty()) sentences.push_back(std::move(trimmed));
        current.clear();
    };
    for (char c : text) {
        if (c == '.') {
            current.push_back('.');
            flush();
        } else if (c == '\n') {
            flush();
        } else {
            current.push_back(c);
        }
    }
    flush();
    return sentences;
}

std::vector<std::string> chunk_texts(std::string_view text, const ChunkingConfig& config) {
    std::vector<std::string> texts;
    if (config.strategy == ChunkStrategy::Sentence) {
        const auto sentences = split_sentences(text);
        std::vector<std::string> current;
        int current_tokens = 0;
        auto flush = [&]() {
            if (current.empty()) return;
            std::string merged;
            for (std::size_t i = 0; i < current.size(); ++i) {
                if (i) merged.push_back(' ');
                merged += current[i];
            }
            texts.push_back(std::move(merged));
            current.clear();
            current_tokens = 0;
        };
        for (const auto& sentence : sentences) {
            const int n = static_cast<int>(tokenize_whitespace(sentence).size());
            if (!current.empty() && current_tokens + n > config.chunk_tokens) flush();
            current.push_back(sentence);
            current_tokens += n;
            // an oversized single sentence becomes its own chunk
            if (current_tokens > config.chunk_tokens) flush();
        }
        flush();
        return texts;
    }

    const auto tokens = tokenize_whitespace(text);
    if (tokens.empty()) return texts;
    const std::size_t n = tokens.size();
    const std::size_t window = static_cast<std::size_t>(config.chunk_tokens);
    const std::size_t stride = config.strategy == ChunkStrategy::Overlap
                                   ? window - static_cast<std::size_t>(config.overlap_tokens)
                                   : window;
    for (std::size_t start = 0; start < n; start += stride) {
        texts.push_back(join_tokens(tokens, start, std::min(start + window, n)));
    }
    return texts;
}

}  // namespace

std::vector<Chunk> chunk(std::string_view text, const ChunkingConfig& config,
                         const std::string& parent_id,
                         const std::map<std::string, std::string>& metadata) {
    config.validate();
    std::vector<Chunk> chunks;
    int seq = 0;
    for (auto& chunk_text : chunk_texts(text, config)) {
        Chunk c;
        c.chunk_id = parent_id + ":c" + std::to_string(seq);
        c.parent_id = parent_id;
        c.seq_index = seq;
        c.text = std::move(chunk_text);
        c.metadata = metadata;
        chunks.push_back(std::move(c));
        ++seq;
    }
    return chunks;
}

ChunkStrategy chunk_strategy_from_string(const std::string& name) {
    if (name == "fixed") return ChunkStrategy::Fixed;
    if (name == "overlap") return ChunkStrategy::Overlap;
    if (name == "sentence") return ChunkStrategy::Sentence;
    throw ValidationError("unknown chunking strategy '" + name + "'");
}

std::string to_string(ChunkStrategy strategy) {
    switch (strategy) {
        case ChunkStrategy::Fixed: return "fixed";
        case ChunkStrategy::Overlap: return "overlap";
        case ChunkStrategy::Sentence: return "sentence";
    }
    return "fixed";
}

}  // namespace hcrag::ingest
