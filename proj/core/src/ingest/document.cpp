#include "hcrag/ingest/document.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hcrag/common/errors.hpp"

namespace hcrag::ingest {

using nlohmann::json;

std::string make_uuid4() {
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    std::uint64_t hi = rng();
    std::uint64_t lo = rng();
    // version 4, variant 10
    hi = (hi & 0xffffffffffff0fffULL) | 0x0000000000004000ULL;
    lo = (lo & 0x3fffffffffffffffULL) | 0x8000000000000000ULL;
    char buf[37];
    std::snprintf(buf, sizeof(buf), "%08x-%04x-%04x-%04x-%012llx",
                  static_cast<unsigned>(hi >> 32), static_cast<unsigned>((hi >> 16) & 0xffff),
                  static_cast<unsigned>(hi & 0xffff), static_cast<unsigned>(lo >> 48),
                  static_cast<unsigned long long>(lo & 0xffffffffffffULL));
    return buf;
}

std::string current_utc_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RawDocument parse_document_json(const std::string& text, const std::string& fallback_source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError("document JSON is invalid: " + std::string(e.what()));
    }
    if (!doc.is_object() || !doc.contains("sourcePath") || !doc.contains("text")) {
        throw ValidationError("document JSON requires sourcePath and text fields");
    }
    RawDocument out;
    out.doc_uuid = doc.value("docUUID", "");
    if (out.doc_uuid.empty()) out.doc_uuid = make_uuid4();
    out.source_path = doc.at("sourcePath").get<std::string>();
    if (out.source_path.empty()) out.source_path = fallback_source;
    out.text = doc.at("text").get<std::string>();
    out.import_date = doc.value("importDate", "");
    if (out.import_date.empty()) out.import_date = current_utc_iso8601();
    if (doc.contains("metadata")) {
        const json& metadata = doc.at("metadata");
        if (!metadata.is_object()) {
            throw ValidationError("document metadata must be an object");
        }
        for (auto it = metadata.begin(); it != metadata.end(); ++it) {
            if (it.value().is_string()) {
                out.metadata[it.key()] = it.value().get<std::string>();
            } else {
                out.metadata[it.key()] = it.value().dump();
            }
        }
    }
    return out;
}

RawDocument load_document_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open document file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document_json(buffer.str(), path);
}

}  // namespace hcrag::ingest
