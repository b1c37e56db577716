#pragma once

#include <set>
#include <string>
#include <string_view>

namespace hcrag::ingest {

// The bundled English stop-word list (one word per line in
// core/data/stopwords_en.txt, embedded at build time).
const std::set<std::string>& stopword_set();
bool is_stopword(std::string_view word);

// Text normalization applied to every document before chunking and storage:
// lowercases, strips punctuation and special characters except periods and
// newlines, removes stop words on word boundaries, and collapses space runs.
// Idempotent; output alphabet is [a-z0-9. \n].
std::string preprocess(std::string_view text);

}  // namespace hcrag::ingest
