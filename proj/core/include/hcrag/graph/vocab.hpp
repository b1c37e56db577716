#pragma once

namespace hcrag::graph::vocab {

// Node categories: every ingested node carries exactly one nodeCat.
inline constexpr const char* kCatAacsb = "AACSB";
inline constexpr const char* kCatInstitution = "INSTITUTION";

// Property keys shared across modules.
inline constexpr const char* kPropNodeCat = "nodeCat";
inline constexpr const char* kPropText = "text";
inline constexpr const char* kPropName = "name";
inline constexpr const char* kPropSeqIndex = "seqIndex";
inline constexpr const char* kPropSectionNum = "sectionNum";
inline constexpr const char* kPropSectionTitle = "sectionTitle";
inline constexpr const char* kPropStandardNum = "standardNum";
inline constexpr const char* kPropStandardTitle = "standardTitle";
inline constexpr const char* kPropParentStandardNum = "parentStandardNum";
inline constexpr const char* kPropParentDocUuid = "parentDocUUID";
inline constexpr const char* kPropDocUuid = "docUUID";
inline constexpr const char* kPropImportDate = "importDate";
inline constexpr const char* kPropSourcePath = "sourcePath";
inline constexpr const char* kPropModelSummary = "modelSummary";
inline constexpr const char* kPropStandardClassification = "standardClassification";

// Node labels.
inline constexpr const char* kLabelAacsbRoot = "AACSB";
inline constexpr const char* kLabelSection = "Section";
inline constexpr const char* kLabelStandard = "Standard";
inline constexpr const char* kLabelFormal = "Formal";
inline constexpr const char* kLabelDefinition = "Definition";
inline constexpr const char* kLabelBasis = "Basis";
inline constexpr const char* kLabelDocumentation = "Documentation";
inline constexpr const char* kLabelChunk = "Chunk";
inline constexpr const char* kLabelInstitutionRoot = "Institution";
inline constexpr const char* kLabelDocsource = "Docsource";
inline constexpr const char* kLabelDocument = "Document";

// Relationship types for the two hierarchies and the bridge links.
inline constexpr const char* kRelHasSection = "HAS_SECTION";
inline constexpr const char* kRelHasStandard = "HAS_STANDARD";
inline constexpr const char* kRelHasComponent = "HAS_COMPONENT";
inline constexpr const char* kRelHasChunk = "HAS_CHUNK";
inline constexpr const char* kRelFirstChunk = "FIRST_CHUNK";
inline constexpr const char* kRelNext = "NEXT";
inline constexpr const char* kRelHasDocsource = "HAS_DOCSOURCE";
inline constexpr const char* kRelHasDocument = "HAS_DOCUMENT";
inline constexpr const char* kRelMentions = "MENTIONS";
inline constexpr const char* kRelAlignsWith = "ALIGNS_WITH";

// Well-known node ids.
inline constexpr const char* kAacsbRootId = "aacsb";
inline constexpr const char* kInstitutionRootId = "institution";

}  // namespace hcrag::graph::vocab
