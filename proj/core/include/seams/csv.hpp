#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace seams {

// Minimal RFC 4180 CSV: quoted fields, doubled quotes, embedded commas and
// newlines, CRLF tolerated. First record is the header.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::filesystem::path& path);

// Quotes a field if it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

}  // namespace seams
