#pragma once

#include <string>
#include <vector>

namespace hcrag::ingest {

// Proposes allowed node labels from a document corpus. Terms are the
// preprocessed tokens (stop words already excluded); per-document
// tf(t,d) = count / docLength, idf(t) = ln((1+N)/(1+df)) + 1, and a term's
// score is its maximum tf*idf across documents. Returns the top_n terms by
// score, ties broken alphabetically.
std::vector<std::string> propose_labels(const std::vector<std::string>& corpus, int top_n);

}  // namespace hcrag::ingest
