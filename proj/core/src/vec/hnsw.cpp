#include "hcrag/vec/hnsw.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <unordered_set>

namespace hcrag::vec {

namespace {

// splitmix64: small deterministic generator, identical on every platform.
std::uint64_t next_u64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double next_unit(std::uint64_t& state) {
    // 53-bit mantissa mapped into (0, 1]
    return (static_cast<double>(next_u64(state) >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

HnswGraph::HnswGraph(int dim, HnswParams params, std::uint64_t seed)
    : dim_(dim), params_(params), rng_state_(seed), level_mult_(1.0 / std::log(params.m)) {}

int HnswGraph::random_level() {
    const double u = next_unit(rng_state_);
    return static_cast<int>(std::floor(-std::log(u) * level_mult_));
}

double HnswGraph::distance(const Embedding& a, const Embedding& b) const {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (int i = 0; i < dim_; ++i) {
        dot += static_cast<double>(a[i]) * static_cast<double>(b[i]);
        na += static_cast<double>(a[i]) * static_cast<double>(a[i]);
        nb += static_cast<double>(b[i]) * static_cast<double>(b[i]);
    }
    const double denom = std::sqrt(na) * std::sqrt(nb);
    if (denom == 0.0) return 2.0;  // zero vectors sort last
    return 1.0 - dot / denom;
}

std::vector<std::pair<double, std::size_t>> HnswGraph::search_layer(
    const Embedding& query, std::vector<std::pair<double, std::size_t>> entries, int ef, int level,
    const std::vector<Embedding>& vectors) const {
    std::unordered_set<std::size_t> visited;
    // min-heap over candidates to expand; max-heap over collected results
    std::priority_queue<std::pair<double, std::size_t>, std::vector<std::pair<double, std::size_t>>,
                        std::greater<>>
        candidates;
    std::priority_queue<std::pair<double, std::size_t>> results;

    for (const auto& entry : entries) {
        visited.insert(entry.second);
        candidates.push(entry);
        results.push(entry);
    }
    while (static_cast<int>(results.size()) > ef) results.pop();

    while (!candidates.empty()) {
        const auto [dist, slot] = candidates.top();
        candidates.pop();
        if (static_cast<int>(results.size()) >= ef && dist > results.top().first) break;
        for (std::size_t neighbor : links_[slot][level]) {
            if (!visited.insert(neighbor).second) continue;
            const double nd = distance(query, vectors[neighbor]);
            if (static_cast<int>(results.size()) < ef || nd < results.top().first) {
                candidates.emplace(nd, neighbor);
                results.emplace(nd, neighbor);
                if (static_cast<int>(results.size()) > ef) results.pop();
            }
        }
    }

    std::vector<std::pair<double, std::size_t>> out;
    out.reserve(results.size());
    while (!results.empty()) {
        out.push_back(results.top());
        results.pop();
    }
    std::sort(out.begin(), out.end());
    return out;
}

void HnswGraph::insert(std::size_t slot, const std::vector<Embedding>& vectors) {
    const int level = random_level();
    if (levels_.size() <= slot) {
        levels_.resize(slot + 1, 0);
        links_.resize(slot + 1);
    }
    levels_[slot] = level;
    links_[slot].assign(level + 1, {});

    if (top_level_ < 0) {
        entry_point_ = slot;
        top_level_ = level;
        return;
    }

    const Embedding& query = vectors[slot];
    std::pair<double, std::size_t> current{distance(query, vectors[entry_point_]), entry_point_};

    // Greedy descent through layers above the new element's level.
    for (int lc = top_level_; lc > level; --lc) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t neighbor : links_[current.second][lc]) {
                const double nd = distance(query, vectors[neighbor]);
                if (nd < current.first) {
                    current = {nd, neighbor};
                    improved = true;
                }
            }
        }
    }

    std::vector<std::pair<double, std::size_t>> entries{current};
    for (int lc = std::min(level, top_level_); lc >= 0; --lc) {
        auto candidates = search_layer(query, entries, params_.ef_construction, lc, vectors);

        const int m = max_degree(lc);
        std::vector<std::size_t> selected;
        for (const auto& [dist, cand] : candidates) {
            if (static_cast<int>(selected.size()) >= m) break;
            selected.push_back(cand);
        }

        links_[slot][lc] = selected;
        for (std::size_t neighbor : selected) {
            auto& back_links = links_[neighbor][lc];
            back_links.push_back(slot);
            if (static_cast<int>(back_links.size()) > m) {
                // keep the closest m neighbors
                std::vector<std::pair<double, std::size_t>> scored;
                scored.reserve(back_links.size());
                for (std::size_t b : back_links) {
                    scored.emplace_back(distance(vectors[neighbor], vectors[b]), b);
                }
                std::sort(scored.begin(), scored.end());
                back_links.clear();
                for (int i = 0; i < m; ++i) back_links.push_back(scored[i].second);
            }
        }
        entries = std::move(candidates);
    }

    if (level > top_level_) {
        entry_point_ = slot;
        top_level_ = level;
    }
}

std::vector<std::size_t> HnswGraph::search(const Embedding& query, int k, int ef,
                                           const std::vector<Embedding>& vectors) const {
    if (top_level_ < 0) return {};

    std::pair<double, std::size_t> current{distance(query, vectors[entry_point_]), entry_point_};
    for (int lc = top_level_; lc > 0; --lc) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t neighbor : links_[current.second][lc]) {
                const double nd = distance(query, vectors[neighbor]);
                if (nd < current.first) {
                    current = {nd, neighbor};
                    improved = true;
                }
            }
        }
    }

    const auto found = search_layer(query, {current}, std::max(ef, k), 0, vectors);
    std::vector<std::size_t> out;
    out.reserve(found.size());
    for (const auto& [dist, slot] : found) out.push_back(slot);
    return out;
}

}  // namespace hcrag::vec
