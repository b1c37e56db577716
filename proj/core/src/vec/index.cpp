#include "hcrag/vec/index.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <queue>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "hcrag/vec/hnsw.hpp"

namespace hcrag::vec {

using nlohmann::json;

double cosine(const Embedding& a, const Embedding& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError("cosine: dimensions differ (" + std::to_string(a.size()) +
                                     " vs " + std::to_string(b.size()) + ")");
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += static_cast<double>(a[i]) * static_cast<double>(b[i]);
        na += static_cast<double>(a[i]) * static_cast<double>(a[i]);
        nb += static_cast<double>(b[i]) * static_cast<double>(b[i]);
    }
    if (na == 0.0 || nb == 0.0) {
        throw ZeroVectorError("cosine is undefined for an all-zero vector");
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

void IndexConfig::validate() const {
    if (dim <= 0) throw ValidationError("index dim must be positive");
    if (default_k < 1) throw ValidationError("default k must be >= 1");
    if (backend == IndexBackend::Hnsw) {
        if (hnsw.m < 2) throw ValidationError("hnsw M must be >= 2");
        if (hnsw.ef_search < default_k) {
            throw ValidationError("hnsw efSearch must be >= k");
        }
        if (hnsw.ef_construction < 1) throw ValidationError("hnsw efConstruction must be >= 1");
    }
}

VectorIndex::VectorIndex(IndexConfig config) : config_(config) {
    config_.validate();
    if (config_.backend == IndexBackend::Hnsw) {
        hnsw_ = std::make_unique<HnswGraph>(config_.dim, config_.hnsw, config_.seed);
    }
}

VectorIndex::~VectorIndex() = default;

VectorIndex::VectorIndex(VectorIndex&& other) noexcept {
    std::unique_lock lock(other.mutex_);
    config_ = other.config_;
    ids_ = std::move(other.ids_);
    vectors_ = std::move(other.vectors_);
    id_to_slot_ = std::move(other.id_to_slot_);
    hnsw_ = std::move(other.hnsw_);
}

VectorIndex& VectorIndex::operator=(VectorIndex&& other) noexcept {
    if (this != &other) {
        std::scoped_lock lock(mutex_, other.mutex_);
        config_ = other.config_;
        ids_ = std::move(other.ids_);
        vectors_ = std::move(other.vectors_);
        id_to_slot_ = std::move(other.id_to_slot_);
        hnsw_ = std::move(other.hnsw_);
    }
    return *this;
}

std::size_t VectorIndex::size() const {
    std::shared_lock lock(mutex_);
    return ids_.size();
}

bool VectorIndex::contains(const std::string& chunk_id) const {
    std::shared_lock lock(mutex_);
    return id_to_slot_.count(chunk_id) > 0;
}

void VectorIndex::check_dim(const Embedding& embedding) const {
    if (static_cast<int>(embedding.size()) != config_.dim) {
        throw DimensionMismatchError("expected dim " + std::to_string(config_.dim) + ", got " +
                                     std::to_string(embedding.size()));
    }
    for (float v : embedding) {
        if (!std::isfinite(v)) throw ValidationError("embedding entries must be finite");
    }
}

void VectorIndex::add(const std::string& chunk_id, const Embedding& embedding) {
    check_dim(embedding);
    if (std::all_of(embedding.begin(), embedding.end(), [](float v) { return v == 0.0f; })) {
        throw ZeroVectorError("refusing to index the all-zero embedding for '" + chunk_id + "'");
    }
    std::unique_lock lock(mutex_);
    if (id_to_slot_.count(chunk_id)) {
        throw DuplicateError("chunk '" + chunk_id + "' is already indexed");
    }
    const std::size_t slot = ids_.size();
    ids_.push_back(chunk_id);
    vectors_.push_back(embedding);
    id_to_slot_.emplace(chunk_id, slot);
    if (hnsw_) hnsw_->insert(slot, vectors_);
}

std::vector<SearchHit> VectorIndex::top_k(const Embedding& query, int k) const {
    check_dim(query);
    if (k < 1) throw ValidationError("k must be >= 1");
    std::shared_lock lock(mutex_);
    std::vector<SearchHit> hits;
    hits.reserve(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        hits.push_back({ids_[i], cosine(query, vectors_[i])});
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.chunk_id < b.chunk_id;
    });
    if (static_cast<int>(hits.size()) > k) hits.resize(k);
    return hits;
}

std::vector<SearchHit> VectorIndex::top_k_hnsw(const Embedding& query, int k) const {
    return top_k_hnsw(query, k, config_.hnsw.ef_search);
}

std::vector<SearchHit> VectorIndex::top_k_hnsw(const Embedding& query, int k,
                                               int ef_search) const {
    check_dim(query);
    if (k < 1) throw ValidationError("k must be >= 1");
    std::shared_lock lock(mutex_);
    if (!hnsw_) {
        throw ValidationError("index was not built with the hnsw backend");
    }
    if (ids_.empty()) return {};
    const auto slots = hnsw_->search(query, std::max(k, 1), std::max(ef_search, k), vectors_);
    std::vector<SearchHit> hits;
    hits.reserve(slots.size());
    for (std::size_t slot : slots) {
        hits.push_back({ids_[slot], cosine(query, vectors_[slot])});
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.chunk_id < b.chunk_id;
    });
    if (static_cast<int>(hits.size()) > k) hits.resize(k);
    return hits;
}

void VectorIndex::save(const std::string& path) const {
    std::shared_lock lock(mutex_);
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw SnapshotError(SnapshotError::Kind::Io, "cannot open '" + path + "' for writing");
    }
    json header{{"format", "hcrag-vectors"},
                {"format_version", 1},
                {"name", kIndexName},
                {"dim", config_.dim},
                {"backend", config_.backend == IndexBackend::Hnsw ? "hnsw" : "exact"},
                {"m", config_.hnsw.m},
                {"ef_construction", config_.hnsw.ef_construction},
                {"ef_search", config_.hnsw.ef_search},
                {"default_k", config_.default_k},
                {"seed", config_.seed},
                {"count", ids_.size()}};
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        out << json{{"id", ids_[i]}, {"v", vectors_[i]}}.dump() << '\n';
    }
    if (!out) {
        throw SnapshotError(SnapshotError::Kind::Io, "failed writing '" + path + "'");
    }
}

VectorIndex VectorIndex::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SnapshotError(SnapshotError::Kind::Io, "cannot open '" + path + "' for reading");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw SnapshotError(SnapshotError::Kind::Corrupt, "vector file '" + path + "' is empty");
    }
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw SnapshotError(SnapshotError::Kind::Corrupt,
                            "vector header is not valid JSON: " + std::string(e.what()));
    }
    if (header.value("format", "") != "hcrag-vectors") {
        throw SnapshotError(SnapshotError::Kind::Corrupt, "not an hcrag vector file");
    }
    if (header.value("format_version", -1) != 1) {
        throw SnapshotError(SnapshotError::Kind::VersionMismatch,
                            "unsupported vector file version");
    }
    IndexConfig config;
    config.dim = header.value("dim", 0);
    config.backend =
        header.value("backend", "exact") == std::string("hnsw") ? IndexBackend::Hnsw
                                                                : IndexBackend::Exact;
    config.hnsw.m = header.value("m", 16);
    config.hnsw.ef_construction = header.value("ef_construction", 200);
    config.hnsw.ef_search = header.value("ef_search", 64);
    config.default_k = header.value("default_k", 2);
    config.seed = header.value("seed", std::uint64_t{0x5eedULL});
    VectorIndex index(config);
    const std::size_t count = header.value("count", std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) {
            throw SnapshotError(SnapshotError::Kind::Corrupt,
                                "vector file truncated at record " + std::to_string(i));
        }
        try {
            json record = json::parse(line);
            index.add(record.at("id").get<std::string>(), record.at("v").get<Embedding>());
        } catch (const json::exception& e) {
            throw SnapshotError(SnapshotError::Kind::Corrupt,
                                "corrupt vector record: " + std::string(e.what()));
        }
    }
    return index;
}

}  // namespace hcrag::vec
