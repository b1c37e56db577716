#pragma once

#include <string>
#include <vector>

#include "hcrag/graph/store.hpp"
#include "hcrag/ingest/chunker.hpp"
#include "hcrag/ingest/document.hpp"
#include "hcrag/ingest/standards.hpp"

namespace hcrag::ingest {

struct HierarchyCounts {
    std::size_t sections = 0;
    std::size_t standards = 0;
    std::size_t components = 0;
    std::size_t chunks = 0;
};

// Builds the structured hierarchy: root -> Section -> Standard -> the four
// component nodes (Formal, Definition, Basis, Documentation) -> Chunk nodes,
// with chunks linked pairwise by NEXT in sequence order. Runs in four
// phases: standards, components with chunks, chunk links, component links.
HierarchyCounts build_standard_hierarchy(graph::GraphStore& store, const StandardsImport& data,
                                         const ChunkingConfig& chunking);

// Creates (or returns) the Docsource node for one import batch.
std::string ensure_docsource(graph::GraphStore& store, const std::string& docsource_id,
                             const std::string& import_date, const std::string& source_path);

// Builds the unstructured side: Institution root -> Docsource -> Document
// (linked as a list in import order) -> Chunk children. The Document starts
// with an empty modelSummary and no standardClassification. Returns the
// Document node id. Throws DuplicateError when doc_uuid was already ingested.
std::string build_document_hierarchy(graph::GraphStore& store, const RawDocument& doc,
                                     const std::vector<Chunk>& chunks,
                                     const std::string& docsource_id);

// Document node id for a docUUID ("inst:doc:<uuid>").
std::string document_node_id(const std::string& doc_uuid);

// Walks the NEXT chain from a parent's FIRST_CHUNK edge; returns chunk node
// ids in sequence order.
std::vector<std::string> chunk_chain(const graph::GraphStore& store,
                                     const std::string& parent_id);

}  // namespace hcrag::ingest
