#pragma once

#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "hcrag/graph/property_value.hpp"

namespace hcrag::graph {

struct NodeRecord {
    std::string node_id;
    std::vector<std::string> labels;
    PropertyMap properties;
};

struct EdgeRecord {
    std::string edge_id;  // derived from (from, type, to) when left empty
    std::string rel_type;
    std::string from_id;
    std::string to_id;
    PropertyMap properties;
};

// Label -> property keys seen on nodes with that label, plus the set of
// (fromLabel, relType, toLabel) triples present in the store. Derived
// deterministically; to_text() is stable under re-derivation.
struct GraphSchema {
    std::map<std::string, std::set<std::string>> node_labels;
    std::set<std::tuple<std::string, std::string, std::string>> rel_patterns;

    std::string to_text() const;
    bool operator==(const GraphSchema&) const = default;
};

struct UpsertResult {
    std::string id;
    bool created = false;
};

// Embedded property-graph store. Single writer, concurrent readers; every
// read returns a copy taken under a shared lock so callers never observe a
// partially applied mutation.
class GraphStore {
public:
    GraphStore() = default;

    GraphStore(const GraphStore&) = delete;
    GraphStore& operator=(const GraphStore&) = delete;

    // Moves transfer the data only; the destination keeps its own mutex.
    // Callers must not move a store that other threads are reading.
    GraphStore(GraphStore&& other) noexcept;
    GraphStore& operator=(GraphStore&& other) noexcept;

    // Upsert keyed on node_id: labels are unioned, incoming property keys win.
    UpsertResult upsert_node(const NodeRecord& record);

    // Duplicate (from, rel_type, to) is a no-op. Endpoints must exist.
    UpsertResult upsert_edge(const EdgeRecord& record);

    // Sets or replaces a single property on an existing node.
    void set_node_property(const std::string& node_id, const std::string& key,
                           PropertyValue value);

    std::optional<NodeRecord> node(const std::string& node_id) const;
    bool has_node(const std::string& node_id) const;
    bool has_edge(const std::string& from_id, const std::string& rel_type,
                  const std::string& to_id) const;

    std::vector<std::string> node_ids_with_label(const std::string& label) const;
    std::vector<std::string> all_node_ids() const;

    std::vector<EdgeRecord> edges_from(const std::string& node_id) const;
    std::vector<EdgeRecord> edges_to(const std::string& node_id) const;
    std::vector<EdgeRecord> all_edges() const;

    std::size_t node_count() const;
    std::size_t edge_count() const;

    GraphSchema derive_schema() const;

    // Versioned line-delimited snapshot; see docs in the repo README.
    void snapshot(const std::string& path) const;
    static GraphStore load(const std::string& path);

    static std::string edge_key(const std::string& from_id, const std::string& rel_type,
                                const std::string& to_id);

private:
    void index_edge_locked(std::size_t edge_idx);

    mutable std::shared_mutex mutex_;
    std::map<std::string, NodeRecord> nodes_;
    std::vector<EdgeRecord> edges_;
    std::map<std::string, std::set<std::string>> label_index_;
    std::unordered_map<std::string, std::vector<std::size_t>> out_edges_;
    std::unordered_map<std::string, std::vector<std::size_t>> in_edges_;
    std::set<std::string> edge_keys_;
};

}  // namespace hcrag::graph
