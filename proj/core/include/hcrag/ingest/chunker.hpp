#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hcrag::ingest {

enum class ChunkStrategy { Fixed, Overlap, Sentence };

struct ChunkingConfig {
    ChunkStrategy strategy = ChunkStrategy::Fixed;
    int chunk_tokens = 200;
    int overlap_tokens = 20;

    void validate() const;
};

struct Chunk {
    std::string chunk_id;
    std::string parent_id;
    int seq_index = 0;
    std::string text;
    std::map<std::string, std::string> metadata;
};

// Splits preprocessed text into chunks. Tokens are whitespace-delimited
// words. Fixed: consecutive windows of chunk_tokens. Overlap: windows with
// stride chunk_tokens - overlap_tokens. Sentence: sentences (split on '.'
// and newline) greedily packed to chunk_tokens without splitting a sentence.
// Chunk ids are "<parent_id>:c<seq>"; empty text yields no chunks.
std::vector<Chunk> chunk(std::string_view text, const ChunkingConfig& config,
                         const std::string& parent_id,
                         const std::map<std::string, std::string>& metadata = {});

std::vector<std::string> tokenize_whitespace(std::string_view text);

ChunkStrategy chunk_strategy_from_string(const std::string& name);
std::string to_string(ChunkStrategy strategy);

}  // namespace hcrag::ingest
