#include "hcrag/ingest/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hcrag/common/errors.hpp"
#include "hcrag/ingest/chunker.hpp"
#include "hcrag/ingest/preprocess.hpp"

namespace hcrag::ingest {

namespace {

bool has_word_char(const std::string& token) {
    return std::any_of(token.begin(), token.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    });
}

}  // namespace

std::vector<std::string> propose_labels(const std::vector<std::string>& corpus, int top_n) {
    if (corpus.empty()) throw ValidationError("label proposal requires a non-empty corpus");
    if (top_n <= 0) throw ValidationError("topN must be positive");

    const double n_docs = static_cast<double>(corpus.size());
    std::map<std::string, int> doc_frequency;
    std::vector<std::map<std::string, int>> term_counts(corpus.size());
    std::vector<double> doc_lengths(corpus.size(), 0.0);

    for (std::size_t d = 0; d < corpus.size(); ++d) {
        for (auto& token : tokenize_whitespace(preprocess(corpus[d]))) {
            if (!has_word_char(token)) continue;  // bare punctuation
            ++term_counts[d][token];
            doc_lengths[d] += 1.0;
        }
        for (const auto& [term, _] : term_counts[d]) ++doc_frequency[term];
    }

    std::map<std::string, double> best_score;
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        if (doc_lengths[d] == 0.0) continue;
        for (const auto& [term, count] : term_counts[d]) {
            const double tf = static_cast<double>(count) / doc_lengths[d];
            const double idf =
                std::log((1.0 + n_docs) / (1.0 + static_cast<double>(doc_frequency[term]))) + 1.0;
            const double score = tf * idf;
            auto it = best_score.find(term);
            if (it == best_score.end() || score > it->second) best_score[term] = score;
        }
    }

    std::vector<std::pair<std::string, double>> ranked(best_score.begin(), best_score.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    std::vector<std::string> labels;
    const std::size_t take = std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(top_n));
    labels.reserve(take);
    for (std::size_t i = 0; i < take; ++i) labels.push_back(ranked[i].first);
    return labels;
}

}  // namespace hcrag::ingest
