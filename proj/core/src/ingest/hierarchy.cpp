#include "hcrag/ingest/hierarchy.hpp"

#include <algorithm>

#include "hcrag/common/errors.hpp"
#include "hcrag/graph/vocab.hpp"

namespace hcrag::ingest {

namespace g = hcrag::graph;
namespace v = hcrag::graph::vocab;

namespace {

g::PropertyMap string_metadata_props(const std::map<std::string, std::string>& metadata) {
    g::PropertyMap props;
    for (const auto& [key, value] : metadata) props[key] = value;
    return props;
}

// Inserts chunk nodes under a parent and wires HAS_CHUNK, FIRST_CHUNK, and
// the NEXT chain.
std::size_t attach_chunks(g::GraphStore& store, const std::string& parent_id,
                          const std::vector<Chunk>& chunks, const char* node_cat,
                          const g::PropertyMap& extra_props) {
    for (const auto& chunk : chunks) {
        g::NodeRecord node;
        node.node_id = chunk.chunk_id;
        node.labels = {v::kLabelChunk};
        node.properties = string_metadata_props(chunk.metadata);
        for (const auto& [key, value] : extra_props) node.properties[key] = value;
        node.properties[v::kPropText] = chunk.text;
        node.properties[v::kPropSeqIndex] = static_cast<std::int64_t>(chunk.seq_index);
        node.properties[v::kPropNodeCat] = std::string(node_cat);
        store.upsert_node(node);
    }
    for (const auto& chunk : chunks) {
        store.upsert_edge({"", v::kRelHasChunk, parent_id, chunk.chunk_id, {}});
    }
    if (!chunks.empty()) {
        store.upsert_edge({"", v::kRelFirstChunk, parent_id, chunks.front().chunk_id, {}});
    }
    for (std::size_t i = 0; i + 1 < chunks.size(); ++i) {
        store.upsert_edge({"", v::kRelNext, chunks[i].chunk_id, chunks[i + 1].chunk_id, {}});
    }
    return chunks.size();
}

struct ComponentSpec {
    const char* label;
    const char* id_suffix;
    const std::string* text;
};

}  // namespace

HierarchyCounts build_standard_hierarchy(g::GraphStore& store, const StandardsImport& data,
                                         const ChunkingConfig& chunking) {
    HierarchyCounts counts;

    g::NodeRecord root;
    root.node_id = v::kAacsbRootId;
    root.labels = {v::kLabelAacsbRoot};
    root.properties[v::kPropName] = std::string("AACSB");
    root.properties[v::kPropNodeCat] = std::string(v::kCatAacsb);
    store.upsert_node(root);

    for (const auto& section : data.sections) {
        g::NodeRecord node;
        node.node_id = std::string(v::kAacsbRootId) + ":section:" +
                       std::to_string(section.section_num);
        node.labels = {v::kLabelSection};
        node.properties[v::kPropSectionNum] = static_cast<std::int64_t>(section.section_num);
        node.properties[v::kPropSectionTitle] = section.section_title;
        node.properties[v::kPropText] = section.section_description;
        node.properties[v::kPropNodeCat] = std::string(v::kCatAacsb);
        store.upsert_node(node);
        ++counts.sections;
    }

    // Phase 1: Standard nodes.
    for (const auto& standard : data.standards) {
        g::NodeRecord node;
        node.node_id = std::string(v::kAacsbRootId) + ":standard:" +
                       std::to_string(standard.standard_num);
        node.labels = {v::kLabelStandard};
        node.properties[v::kPropStandardNum] = static_cast<std::int64_t>(standard.standard_num);
        node.properties[v::kPropStandardTitle] = standard.standard_title;
        node.properties[v::kPropText] = standard.standard_title;
        node.properties[v::kPropNodeCat] = std::string(v::kCatAacsb);
        store.upsert_node(node);
        ++counts.standards;
    }

    // Phases 2-4 per standard: component nodes with chunks, chunk links,
    // then component links up to the standard.
    for (const auto& standard : data.standards) {
        const std::string standard_id = std::string(v::kAacsbRootId) + ":standard:" +
                                        std::to_string(standard.standard_num);
        const ComponentSpec components[] = {
            {v::kLabelFormal, "formal", &standard.standard_formal},
            {v::kLabelDefinition, "definition", &standard.definitions},
            {v::kLabelBasis, "basis", &standard.basis_for_judgment},
            {v::kLabelDocumentation, "documentation", &standard.supporting_docs},
        };
        for (const auto& component : components) {
            const std::string component_id = standard_id + ":" + component.id_suffix;

            // Phase 2: component node and its chunk nodes.
            g::NodeRecord node;
            node.node_id = component_id;
            node.labels = {component.label};
            node.properties[v::kPropParentStandardNum] =
                static_cast<std::int64_t>(standard.standard_num);
            node.properties[v::kPropText] = *component.text;
            node.properties[v::kPropNodeCat] = std::string(v::kCatAacsb);
            store.upsert_node(node);
            ++counts.components;

            g::PropertyMap chunk_extra;
            chunk_extra[v::kPropParentStandardNum] =
                static_cast<std::int64_t>(standard.standard_num);

            // Phase 3 happens inside attach_chunks: NEXT chain plus parent links.
            const auto chunks = chunk(*component.text, chunking, component_id,
                                      {{"component", component.id_suffix},
                                       {"standard", std::to_string(standard.standard_num)}});
            counts.chunks += attach_chunks(store, component_id, chunks, v::kCatAacsb, chunk_extra);

            // Phase 4: component linked to its parent standard.
            store.upsert_edge({"", v::kRelHasComponent, standard_id, component_id, {}});
        }
    }

    for (const auto& section : data.sections) {
        const std::string section_id = std::string(v::kAacsbRootId) + ":section:" +
                                       std::to_string(section.section_num);
        store.upsert_edge({"", v::kRelHasSection, v::kAacsbRootId, section_id, {}});
    }
    for (const auto& standard : data.standards) {
        const std::string section_id =
            std::string(v::kAacsbRootId) + ":section:" + std::to_string(standard.section);
        const std::string standard_id = std::string(v::kAacsbRootId) + ":standard:" +
                                        std::to_string(standard.standard_num);
        store.upsert_edge({"", v::kRelHasStandard, section_id, standard_id, {}});
    }
    return counts;
}

std::string document_node_id(const std::string& doc_uuid) {
    return "inst:doc:" + doc_uuid;
}

std::string ensure_docsource(g::GraphStore& store, const std::string& docsource_id,
                             const std::string& import_date, const std::string& source_path) {
    g::NodeRecord root;
    root.node_id = v::kInstitutionRootId;
    root.labels = {v::kLabelInstitutionRoot};
    root.properties[v::kPropName] = std::string("Institution");
    root.properties[v::kPropNodeCat] = std::string(v::kCatInstitution);
    store.upsert_node(root);

    g::NodeRecord docsource;
    docsource.node_id = docsource_id;
    docsource.labels = {v::kLabelDocsource};
    docsource.properties[v::kPropImportDate] = import_date;
    docsource.properties[v::kPropSourcePath] = source_path;
    docsource.properties[v::kPropNodeCat] = std::string(v::kCatInstitution);
    store.upsert_node(docsource);

    store.upsert_edge({"", v::kRelHasDocsource, v::kInstitutionRootId, docsource_id, {}});
    return docsource_id;
}

std::string build_document_hierarchy(g::GraphStore& store, const RawDocument& doc,
                                     const std::vector<Chunk>& chunks,
                                     const std::string& docsource_id) {
    if (!store.has_node(docsource_id)) {
        throw NotFoundError("docsource '" + docsource_id + "' does not exist");
    }
    const std::string doc_id = document_node_id(doc.doc_uuid);
    if (store.has_node(doc_id)) {
        throw DuplicateError("document with docUUID '" + doc.doc_uuid +
                             "' was already ingested");
    }

    // Predecessor in the per-docsource document list, by seqIndex.
    std::string previous_doc_id;
    std::int64_t next_seq = 0;
    for (const auto& edge : store.edges_from(docsource_id)) {
        if (edge.rel_type != v::kRelHasDocument) continue;
        const auto node = store.node(edge.to_id);
        if (!node) continue;
        auto it = node->properties.find(v::kPropSeqIndex);
        if (it == node->properties.end()) continue;
        const std::int64_t seq = std::get<std::int64_t>(it->second);
        if (seq >= next_seq) {
            next_seq = seq + 1;
            previous_doc_id = edge.to_id;
        }
    }

    g::NodeRecord node;
    node.node_id = doc_id;
    node.labels = {v::kLabelDocument};
    node.properties = string_metadata_props(doc.metadata);
    node.properties[v::kPropDocUuid] = doc.doc_uuid;
    node.properties[v::kPropSourcePath] = doc.source_path;
    node.properties[v::kPropModelSummary] = std::string();
    node.properties[v::kPropSeqIndex] = next_seq;
    node.properties[v::kPropNodeCat] = std::string(v::kCatInstitution);
    store.upsert_node(node);

    store.upsert_edge({"", v::kRelHasDocument, docsource_id, doc_id, {}});
    if (!previous_doc_id.empty()) {
        store.upsert_edge({"", v::kRelNext, previous_doc_id, doc_id, {}});
    }

    g::PropertyMap chunk_extra;
    chunk_extra[v::kPropParentDocUuid] = doc.doc_uuid;
    attach_chunks(store, doc_id, chunks, v::kCatInstitution, chunk_extra);
    return doc_id;
}

std::vector<std::string> chunk_chain(const g::GraphStore& store, const std::string& parent_id) {
    std::string head;
    for (const auto& edge : store.edges_from(parent_id)) {
        if (edge.rel_type == v::kRelFirstChunk) {
            head = edge.to_id;
            break;
        }
    }
    std::vector<std::string> chain;
    while (!head.empty()) {
        chain.push_back(head);
        std::string next;
        for (const auto& edge : store.edges_from(head)) {
            if (edge.rel_type == v::kRelNext) {
                next = edge.to_id;
                break;
            }
        }
        head = std::move(next);
    }
    return chain;
}

}  // namespace hcrag::ingest
