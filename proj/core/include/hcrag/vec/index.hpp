#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcrag/common/errors.hpp"

namespace hcrag::vec {

using Embedding = std::vector<float>;

// Cosine similarity with double accumulation. Throws on dimension mismatch
// or when either vector is all-zero.
double cosine(const Embedding& a, const Embedding& b);

struct HnswParams {
    int m = 16;
    int ef_construction = 200;
    int ef_search = 64;
};

enum class IndexBackend { Exact, Hnsw };

struct IndexConfig {
    int dim = 64;
    IndexBackend backend = IndexBackend::Exact;
    HnswParams hnsw;
    int default_k = 2;
    std::uint64_t seed = 0x5eedULL;  // drives HNSW level assignment

    void validate() const;
};

struct SearchHit {
    std::string chunk_id;
    double score = 0.0;  // cosine similarity in [-1, 1]
};

class HnswGraph;

// Embedding store with exact cosine top-k and an optional HNSW approximate
// backend. Reads are concurrent; add() serializes with readers.
class VectorIndex {
public:
    explicit VectorIndex(IndexConfig config);
    ~VectorIndex();

    VectorIndex(VectorIndex&& other) noexcept;
    VectorIndex& operator=(VectorIndex&& other) noexcept;
    VectorIndex(const VectorIndex&) = delete;
    VectorIndex& operator=(const VectorIndex&) = delete;

    const IndexConfig& config() const { return config_; }
    std::size_t size() const;
    bool contains(const std::string& chunk_id) const;

    void add(const std::string& chunk_id, const Embedding& embedding);

    // Exact top-k: full scan, sorted by score descending then chunk id
    // ascending; returns min(k, size) hits.
    std::vector<SearchHit> top_k(const Embedding& query, int k) const;

    // Approximate top-k over the HNSW graph; same sort contract. Requires
    // the hnsw backend.
    std::vector<SearchHit> top_k_hnsw(const Embedding& query, int k) const;
    std::vector<SearchHit> top_k_hnsw(const Embedding& query, int k, int ef_search) const;

    // Persists entries in insertion order; the HNSW graph is rebuilt
    // deterministically on load.
    void save(const std::string& path) const;
    static VectorIndex load(const std::string& path);

    // Fixed name of the single index instance used by the engine.
    static constexpr const char* kIndexName = "accreditation_index";

private:
    void check_dim(const Embedding& embedding) const;

    mutable std::shared_mutex mutex_;
    IndexConfig config_;
    std::vector<std::string> ids_;           // insertion order
    std::vector<Embedding> vectors_;         // parallel to ids_
    std::unordered_map<std::string, std::size_t> id_to_slot_;
    std::unique_ptr<HnswGraph> hnsw_;
};

}  // namespace hcrag::vec
