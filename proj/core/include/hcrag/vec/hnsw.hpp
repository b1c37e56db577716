#pragma once

#include <cstdint>
#include <vector>

#include "hcrag/vec/index.hpp"

namespace hcrag::vec {

// Hierarchical navigable small world graph over externally owned vectors.
// Elements are identified by their slot in the owner's vector array; levels
// are drawn from a seeded generator so identical insertion sequences build
// identical graphs on every platform.
class HnswGraph {
public:
    HnswGraph(int dim, HnswParams params, std::uint64_t seed);

    // Inserts the element at `slot`; `vectors` must contain it already.
    void insert(std::size_t slot, const std::vector<Embedding>& vectors);

    // Returns up to max(ef, k) candidate slots ordered by increasing cosine
    // distance to the query.
    std::vector<std::size_t> search(const Embedding& query, int k, int ef,
                                    const std::vector<Embedding>& vectors) const;

    std::size_t size() const { return levels_.size(); }

private:
    int random_level();
    double distance(const Embedding& a, const Embedding& b) const;

    // Greedy ef-bounded best-first scan of one layer.
    std::vector<std::pair<double, std::size_t>> search_layer(
        const Embedding& query, std::vector<std::pair<double, std::size_t>> entries, int ef,
        int level, const std::vector<Embedding>& vectors) const;

    int max_degree(int level) const { return level == 0 ? 2 * params_.m : params_.m; }

    int dim_;
    HnswParams params_;
    std::uint64_t rng_state_;
    double level_mult_;

    std::vector<int> levels_;                                   // per slot
    std::vector<std::vector<std::vector<std::size_t>>> links_;  // slot -> level -> neighbors
    std::size_t entry_point_ = 0;
    int top_level_ = -1;
};

}  // namespace hcrag::vec
