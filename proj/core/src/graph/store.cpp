#include "hcrag/graph/store.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hcrag/common/errors.hpp"

namespace hcrag::graph {

using nlohmann::json;

namespace {

constexpr int kSnapshotFormatVersion = 1;

void validate_node(const NodeRecord& record) {
    if (record.node_id.empty()) {
        throw ValidationError("node requires a non-empty nodeId");
    }
    if (record.labels.empty()) {
        throw ValidationError("node '" + record.node_id + "' requires at least one label");
    }
    for (const auto& label : record.labels) {
        if (label.empty()) {
            throw ValidationError("node '" + record.node_id + "' has an empty label");
        }
    }
}

}  // namespace

std::string GraphSchema::to_text() const {
    std::ostringstream out;
    out << "Node labels and properties:\n";
    for (const auto& [label, keys] : node_labels) {
        out << "  " << label << " {";
        bool first = true;
        for (const auto& key : keys) {
            if (!first) out << ", ";
            out << key;
            first = false;
        }
        out << "}\n";
    }
    out << "Relationship patterns:\n";
    for (const auto& [from, rel, to] : rel_patterns) {
        out << "  (" << from << ")-[:" << rel << "]->(" << to << ")\n";
    }
    return out.str();
}

std::string GraphStore::edge_key(const std::string& from_id, const std::string& rel_type,
                                 const std::string& to_id) {
    return from_id + "\x1f" + rel_type + "\x1f" + to_id;
}

GraphStore::GraphStore(GraphStore&& other) noexcept {
    std::unique_lock lock(other.mutex_);
    nodes_ = std::move(other.nodes_);
    edges_ = std::move(other.edges_);
    label_index_ = std::move(other.label_index_);
    out_edges_ = std::move(other.out_edges_);
    in_edges_ = std::move(other.in_edges_);
    edge_keys_ = std::move(other.edge_keys_);
}

GraphStore& GraphStore::operator=(GraphStore&& other) noexcept {
    if (this != &other) {
        std::scoped_lock lock(mutex_, other.mutex_);
        nodes_ = std::move(other.nodes_);
        edges_ = std::move(other.edges_);
        label_index_ = std::move(other.label_index_);
        out_edges_ = std::move(other.out_edges_);
        in_edges_ = std::move(other.in_edges_);
        edge_keys_ = std::move(other.edge_keys_);
    }
    return *this;
}

UpsertResult GraphStore::upsert_node(const NodeRecord& record) {
    validate_node(record);
    std::unique_lock lock(mutex_);
    auto it = nodes_.find(record.node_id);
    if (it == nodes_.end()) {
        NodeRecord stored = record;
        std::sort(stored.labels.begin(), stored.labels.end());
        stored.labels.erase(std::unique(stored.labels.begin(), stored.labels.end()),
                            stored.labels.end());
        for (const auto& label : stored.labels) {
            label_index_[label].insert(stored.node_id);
        }
        nodes_.emplace(record.node_id, std::move(stored));
        return {record.node_id, true};
    }
    NodeRecord& existing = it->second;
    for (const auto& label : record.labels) {
        if (std::find(existing.labels.begin(), existing.labels.end(), label) ==
            existing.labels.end()) {
            existing.labels.push_back(label);
            label_index_[label].insert(existing.node_id);
        }
    }
    std::sort(existing.labels.begin(), existing.labels.end());
    for (const auto& [key, value] : record.properties) {
        existing.properties[key] = value;  // new keys win
    }
    return {record.node_id, false};
}

UpsertResult GraphStore::upsert_edge(const EdgeRecord& record) {
    if (record.rel_type.empty()) {
        throw ValidationError("edge requires a non-empty relType");
    }
    std::unique_lock lock(mutex_);
    if (!nodes_.count(record.from_id)) {
        throw IntegrityError("edge endpoint '" + record.from_id + "' does not exist");
    }
    if (!nodes_.count(record.to_id)) {
        throw IntegrityError("edge endpoint '" + record.to_id + "' does not exist");
    }
    const std::string key = edge_key(record.from_id, record.rel_type, record.to_id);
    if (edge_keys_.count(key)) {
        return {key, false};
    }
    EdgeRecord stored = record;
    if (stored.edge_id.empty()) {
        stored.edge_id = record.from_id + "-" + record.rel_type + "->" + record.to_id;
    }
    edges_.push_back(std::move(stored));
    edge_keys_.insert(key);
    index_edge_locked(edges_.size() - 1);
    return {key, true};
}

void GraphStore::index_edge_locked(std::size_t edge_idx) {
    const EdgeRecord& edge = edges_[edge_idx];
    out_edges_[edge.from_id].push_back(edge_idx);
    in_edges_[edge.to_id].push_back(edge_idx);
}

void GraphStore::set_node_property(const std::string& node_id, const std::string& key,
                                   PropertyValue value) {
    std::unique_lock lock(mutex_);
    auto it = nodes_.find(node_id);
    if (it == nodes_.end()) {
        throw NotFoundError("node '" + node_id + "' does not exist");
    }
    it->second.properties[key] = std::move(value);
}

std::optional<NodeRecord> GraphStore::node(const std::string& node_id) const {
    std::shared_lock lock(mutex_);
    auto it = nodes_.find(node_id);
    if (it == nodes_.end()) return std::nullopt;
    return it->second;
}

bool GraphStore::has_node(const std::string& node_id) const {
    std::shared_lock lock(mutex_);
    return nodes_.count(node_id) > 0;
}

bool GraphStore::has_edge(const std::string& from_id, const std::string& rel_type,
                          const std::string& to_id) const {
    std::shared_lock lock(mutex_);
    return edge_keys_.count(edge_key(from_id, rel_type, to_id)) > 0;
}

std::vector<std::string> GraphStore::node_ids_with_label(const std::string& label) const {
    std::shared_lock lock(mutex_);
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

std::vector<std::string> GraphStore::all_node_ids() const {
    std::shared_lock lock(mutex_);
    std::vector<std::string> ids;
    ids.reserve(nodes_.size());
    for (const auto& [id, _] : nodes_) ids.push_back(id);
    return ids;
}

std::vector<EdgeRecord> GraphStore::edges_from(const std::string& node_id) const {
    std::shared_lock lock(mutex_);
    std::vector<EdgeRecord> result;
    auto it = out_edges_.find(node_id);
    if (it == out_edges_.end()) return result;
    result.reserve(it->second.size());
    for (std::size_t idx : it->second) result.push_back(edges_[idx]);
    return result;
}

std::vector<EdgeRecord> GraphStore::edges_to(const std::string& node_id) const {
    std::shared_lock lock(mutex_);
    std::vector<EdgeRecord> result;
    auto it = in_edges_.find(node_id);
    if (it == in_edges_.end()) return result;
    result.reserve(it->second.size());
    for (std::size_t idx : it->second) result.push_back(edges_[idx]);
    return result;
}

std::vector<EdgeRecord> GraphStore::all_edges() const {
    std::shared_lock lock(mutex_);
    return edges_;
}

std::size_t GraphStore::node_count() const {
    std::shared_lock lock(mutex_);
    return nodes_.size();
}

std::size_t GraphStore::edge_count() const {
    std::shared_lock lock(mutex_);
    return edges_.size();
}

GraphSchema GraphStore::derive_schema() const {
    std::shared_lock lock(mutex_);
    GraphSchema schema;
    for (const auto& [id, node] : nodes_) {
        for (const auto& label : node.labels) {
            auto& keys = schema.node_labels[label];
            for (const auto& [key, _] : node.properties) keys.insert(key);
        }
    }
    for (const auto& edge : edges_) {
        const auto& from = nodes_.at(edge.from_id);
        const auto& to = nodes_.at(edge.to_id);
        for (const auto& from_label : from.labels) {
            for (const auto& to_label : to.labels) {
                schema.rel_patterns.emplace(from_label, edge.rel_type, to_label);
            }
        }
    }
    return schema;
}

void GraphStore::snapshot(const std::string& path) const {
    std::shared_lock lock(mutex_);
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw SnapshotError(SnapshotError::Kind::Io, "cannot open '" + path + "' for writing");
    }
    json header{{"format", "hcrag-graph"},
                {"format_version", kSnapshotFormatVersion},
                {"node_count", nodes_.size()},
                {"edge_count", edges_.size()}};
    out << header.dump() << '\n';
    for (const auto& [id, node] : nodes_) {
        json props = json::object();
        for (const auto& [key, value] : node.properties) {
            props[key] = property_to_json(value);
        }
        json line{{"id", node.node_id}, {"labels", node.labels}, {"props", props}};
        out << line.dump() << '\n';
    }
    for (const auto& edge : edges_) {
        json props = json::object();
        for (const auto& [key, value] : edge.properties) {
            props[key] = property_to_json(value);
        }
        json line{{"eid", edge.edge_id},
                  {"type", edge.rel_type},
                  {"from", edge.from_id},
                  {"to", edge.to_id},
                  {"props", props}};
        out << line.dump() << '\n';
    }
    if (!out) {
        throw SnapshotError(SnapshotError::Kind::Io, "failed writing snapshot to '" + path + "'");
    }
}

GraphStore GraphStore::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SnapshotError(SnapshotError::Kind::Io, "cannot open '" + path + "' for reading");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw SnapshotError(SnapshotError::Kind::Corrupt, "snapshot '" + path + "' is empty");
    }
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw SnapshotError(SnapshotError::Kind::Corrupt,
                            "snapshot header is not valid JSON: " + std::string(e.what()));
    }
    if (!header.is_object() || header.value("format", "") != "hcrag-graph") {
        throw SnapshotError(SnapshotError::Kind::Corrupt, "not an hcrag graph snapshot");
    }
    const int version = header.value("format_version", -1);
    if (version != kSnapshotFormatVersion) {
        throw SnapshotError(SnapshotError::Kind::VersionMismatch,
                            "snapshot format_version " + std::to_string(version) +
                                " is not supported (expected " +
                                std::to_string(kSnapshotFormatVersion) + ")");
    }
    const std::size_t node_count = header.value("node_count", std::size_t{0});
    const std::size_t edge_count = header.value("edge_count", std::size_t{0});

    GraphStore store;
    auto parse_props = [](const json& obj) {
        PropertyMap props;
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            props[it.key()] = property_from_json(it.value());
        }
        return props;
    };

    for (std::size_t i = 0; i < node_count; ++i) {
        if (!std::getline(in, line)) {
            throw SnapshotError(SnapshotError::Kind::Corrupt,
                                "snapshot truncated: expected " + std::to_string(node_count) +
                                    " node records, got " + std::to_string(i));
        }
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            throw SnapshotError(SnapshotError::Kind::Corrupt,
                                "corrupt node record: " + std::string(e.what()));
        }
        try {
            NodeRecord node{record.at("id").get<std::string>(),
                            record.at("labels").get<std::vector<std::string>>(),
                            parse_props(record.at("props"))};
            store.upsert_node(node);
        } catch (const json::exception& e) {
            throw SnapshotError(SnapshotError::Kind::Corrupt,
                                "corrupt node record: " + std::string(e.what()));
        }
    }
    for (std::size_t i = 0; i < edge_count; ++i) {
        if (!std::getline(in, line)) {
            throw SnapshotError(SnapshotError::Kind::Corrupt,
                                "snapshot truncated: expected " + std::to_string(edge_count) +
                                    " edge records, got " + std::to_string(i));
        }
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            throw SnapshotError(SnapshotError::Kind::Corrupt,
                                "corrupt edge record: " + std::string(e.what()));
        }
        try {
            EdgeRecord edge{record.at("eid").get<std::string>(),
                            record.at("type").get<std::string>(),
                            record.at("from").get<std::string>(),
                            record.at("to").get<std::string>(),
                            parse_props(record.at("props"))};
            store.upsert_edge(edge);
        } catch (const json::exception& e) {
            throw SnapshotError(SnapshotError::Kind::Corrupt,
                                "corrupt edge record: " + std::string(e.what()));
        }
    }
    return store;
}

}  // namespace hcrag::graph
