#include "hcrag/ingest/csv.hpp"

#include <fstream>
#include <sstream>

#include "hcrag/common/errors.hpp"

namespace hcrag::ingest {

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_has_content = false;

    auto end_field = [&]() {
        row.push_back(field);
        field.clear();
    };
    auto end_row = [&]() {
        end_field();
        rows.push_back(row);
        row.clear();
        row_has_content = false;
    };

    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                row_has_content = true;
                break;
            case ',':
                end_field();
                row_has_content = true;
                break;
            case '\r':
                break;
            case '\n':
                if (row_has_content || !field.empty() || !row.empty()) end_row();
                break;
            default:
                field.push_back(c);
                row_has_content = true;
                break;
        }
    }
    if (in_quotes) {
        throw ValidationError("unterminated quoted field in CSV input");
    }
    if (row_has_content || !field.empty() || !row.empty()) end_row();
    return rows;
}

std::vector<std::vector<std::string>> read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open CSV file '" + path + "'");
    return read_csv(in);
}

}  // namespace hcrag::ingest
