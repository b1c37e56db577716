#pragma once

#include <istream>
#include <string>
#include <vector>

namespace hcrag::ingest {

// Minimal RFC-4180 reader: comma-separated fields, double-quote quoting with
// "" escapes, embedded newlines inside quoted fields, CRLF tolerated.
std::vector<std::vector<std::string>> read_csv(std::istream& in);
std::vector<std::vector<std::string>> read_csv_file(const std::string& path);

}  // namespace hcrag::ingest
