#pragma once

#include <istream>
#include <string>
#include <vector>

namespace hcrag::ingest {

struct SectionRecord {
    int section_num = 0;  // 1..3
    std::string section_title;
    std::string section_description;
};

struct StandardRecord {
    int section = 0;
    int standard_num = 0;  // unique, 1..9
    std::string standard_title;
    std::string standard_formal;
    std::string definitions;
    std::string basis_for_judgment;
    std::string supporting_docs;
};

struct StandardsImport {
    std::vector<SectionRecord> sections;
    std::vector<StandardRecord> standards;
};

// Parses the two CSVs (exact headers: Section_Num,Section_Title,
// Section_Description and Section,Standard_num,Standard_title,
// Standard_formal,Definitions,Basis_for_judgment,Supporting_docs),
// preprocesses every text field, and validates record invariants.
StandardsImport import_standards(std::istream& sections_csv, std::istream& standards_csv);
StandardsImport import_standards_files(const std::string& sections_path,
                                       const std::string& standards_path);

// Writes the structured-standards JSON document described in the README.
void write_structured_json(const StandardsImport& data, const std::string& path);
std::string structured_json(const StandardsImport& data);

}  // namespace hcrag::ingest
