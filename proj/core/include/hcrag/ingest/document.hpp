#pragma once

#include <map>
#include <string>

namespace hcrag::ingest {

struct RawDocument {
    std::string doc_uuid;
    std::string source_path;
    std::string import_date;  // ISO-8601
    std::string text;         // full document text, may be empty
    std::map<std::string, std::string> metadata;
};

// Parses a document-ingest JSON file: {docUUID?, sourcePath, text, metadata{}}.
// A UUIDv4 is generated when docUUID is absent; import_date defaults to the
// current UTC time when the file does not carry a timestamp.
RawDocument load_document_json(const std::string& path);
RawDocument parse_document_json(const std::string& text, const std::string& fallback_source);

std::string make_uuid4();
std::string current_utc_iso8601();

}  // namespace hcrag::ingest
