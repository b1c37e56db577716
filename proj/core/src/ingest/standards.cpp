#include "hcrag/ingest/standards.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hcrag/common/errors.hpp"
#include "hcrag/ingest/csv.hpp"
#include "hcrag/ingest/preprocess.hpp"

namespace hcrag::ingest {

using nlohmann::json;

namespace {

const std::vector<std::string> kSectionHeaders = {"Section_Num", "Section_Title",
                                                  "Section_Description"};
const std::vector<std::string> kStandardHeaders = {
    "Section",     "Standard_num",       "Standard_title", "Standard_formal",
    "Definitions", "Basis_for_judgment", "Supporting_docs"};

void check_header(const std::vector<std::vector<std::string>>& rows,
                  const std::vector<std::string>& expected, const char* what) {
    if (rows.empty()) {
        throw ValidationError(std::string(what) + " CSV is empty");
    }
    if (rows[0] != expected) {
        std::ostringstream msg;
        msg << what << " CSV header mismatch: expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg << ",";
            msg << expected[i];
        }
        msg << " got ";
        for (std::size_t i = 0; i < rows[0].size(); ++i) {
            if (i) msg << ",";
            msg << rows[0][i];
        }
        throw ValidationError(msg.str());
    }
}

int parse_int_field(const std::string& value, const char* what) {
    std::size_t consumed = 0;
    int parsed = 0;
    try {
        parsed = std::stoi(value, &consumed);
    } catch (const std::exception&) {
        throw ValidationError(std::string(what) + " must be an integer, got '" + value + "'");
    }
    if (consumed != value.size()) {
        throw ValidationError(std::string(what) + " must be an integer, got '" + value + "'");
    }
    return parsed;
}

}  // namespace

StandardsImport import_standards(std::istream& sections_csv, std::istream& standards_csv) {
    StandardsImport out;

    const auto section_rows = read_csv(sections_csv);
    check_header(section_rows, kSectionHeaders, "sections");
    std::set<int> section_nums;
    for (std::size_t r = 1; r < section_rows.size(); ++r) {
        const auto& row = section_rows[r];
        if (row.size() != kSectionHeaders.size()) {
            throw ValidationError("sections CSV row " + std::to_string(r) + " has " +
                                  std::to_string(row.size()) + " fields, expected " +
                                  std::to_string(kSectionHeaders.size()));
        }
        SectionRecord record;
        record.section_num = parse_int_field(row[0], "Section_Num");
        if (record.section_num < 1 || record.section_num > 3) {
            throw ValidationError("Section_Num must be 1..3, got " +
                                  std::to_string(record.section_num));
        }
        if (!section_nums.insert(record.section_num).second) {
            throw DuplicateError("duplicate Section_Num " + std::to_string(record.section_num));
        }
        record.section_title = preprocess(row[1]);
        record.section_description = preprocess(row[2]);
        out.sections.push_back(std::move(record));
    }

    const auto standard_rows = read_csv(standards_csv);
    check_header(standard_rows, kStandardHeaders, "standards");
    std::set<int> standard_nums;
    for (std::size_t r = 1; r < standard_rows.size(); ++r) {
        const auto& row = standard_rows[r];
        if (row.size() != kStandardHeaders.size()) {
            throw ValidationError("standards CSV row " + std::to_string(r) + " has " +
                                  std::to_string(row.size()) + " fields, expected " +
                                  std::to_string(kStandardHeaders.size()));
        }
        StandardRecord record;
        record.section = parse_int_field(row[0], "Section");
        record.standard_num = parse_int_field(row[1], "Standard_num");
        if (record.standard_num < 1 || record.standard_num > 9) {
            throw ValidationError("Standard_num must be 1..9, got " +
                                  std::to_string(record.standard_num));
        }
        if (!standard_nums.insert(record.standard_num).second) {
            throw DuplicateError("duplicate Standard_num " +
                                 std::to_string(record.standard_num));
        }
        if (!section_nums.count(record.section)) {
            throw ValidationError("standard " + std::to_string(record.standard_num) +
                                  " references unknown section " +
                                  std::to_string(record.section));
        }
        record.standard_title = preprocess(row[2]);
        record.standard_formal = preprocess(row[3]);
        record.definitions = preprocess(row[4]);
        record.basis_for_judgment = preprocess(row[5]);
        record.supporting_docs = preprocess(row[6]);
        out.standards.push_back(std::move(record));
    }
    return out;
}

StandardsImport import_standards_files(const std::string& sections_path,
                                       const std::string& standards_path) {
    std::ifstream sections(sections_path);
    if (!sections) throw IoError("cannot open '" + sections_path + "'");
    std::ifstream standards(standards_path);
    if (!standards) throw IoError("cannot open '" + standards_path + "'");
    return import_standards(sections, standards);
}

std::string structured_json(const StandardsImport& data) {
    json sections = json::array();
    for (const auto& s : data.sections) {
        sections.push_back({{"sectionNum", s.section_num},
                            {"sectionTitle", s.section_title},
                            {"sectionDescription", s.section_description}});
    }
    json standards = json::array();
    for (const auto& s : data.standards) {
        standards.push_back({{"section", s.section},
                             {"standardNum", s.standard_num},
                             {"standardTitle", s.standard_title},
                             {"standardFormal", s.standard_formal},
                             {"definitions", s.definitions},
                             {"basisForJudgment", s.basis_for_judgment},
                             {"supportingDocs", s.supporting_docs}});
    }
    return json{{"sections", sections}, {"standards", standards}}.dump(2);
}

void write_structured_json(const StandardsImport& data, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << structured_json(data) << '\n';
}

}  // namespace hcrag::ingest
