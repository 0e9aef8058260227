#include "seams/manifest.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "seams/csv.hpp"
#include "seams/error.hpp"

namespace seams {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

bool parse_year(const std::string& raw, int& year) {
    const std::string t = trim(raw);
    if (t.empty()) return false;
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size()) return false;
    if (v < -10000 || v > 10000) return false;
    year = static_cast<int>(v);
    return true;
}

void check_year(PaintingRecord& rec, const std::string& raw, std::size_t row,
                std::vector<std::string>& issues) {
    int year = 0;
    if (parse_year(raw, year)) {
        rec.year = year;
        rec.year_valid = true;
        if (year < 1300) {
            issues.push_back("row " + std::to_string(row) + " (" + rec.painting_id +
                             "): year " + std::to_string(year) +
                             " predates 1300, excluded from aggregates");
        }
    } else {
        rec.year_valid = false;
        issues.push_back("row " + std::to_string(row) + " (" + rec.painting_id +
                         "): unparseable year '" + raw + "', excluded from aggregates");
    }
}

ManifestData load_csv_manifest(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    if (table.header.empty()) throw SchemaError(1, "missing header");

    std::unordered_map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        col[trim(table.header[i])] = i;
    }
    for (const char* required : {"painting_id", "artist_id", "year", "file_path"}) {
        if (!col.count(required)) {
            throw SchemaError(1, std::string("missing required column '") + required + "'");
        }
    }
    auto get = [&](const std::vector<std::string>& row, const char* name) -> std::string {
        const auto it = col.find(name);
        if (it == col.end() || it->second >= row.size()) return "";
        return row[it->second];
    };

    ManifestData data;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const std::size_t file_row = i + 2;  // header is row 1
        const auto& row = table.rows[i];
        if (row.size() != table.header.size()) {
            throw SchemaError(file_row, "expected " + std::to_string(table.header.size()) +
                                            " fields, got " + std::to_string(row.size()));
        }
        PaintingRecord rec;
        rec.painting_id = trim(get(row, "painting_id"));
        rec.artist_id = trim(get(row, "artist_id"));
        rec.artist_name = get(row, "artist_name");
        rec.title = get(row, "title");
        rec.technique = trim(get(row, "technique"));
        rec.genre = trim(get(row, "genre"));
        rec.dataset = trim(get(row, "dataset"));
        rec.file_path = trim(get(row, "file_path"));
        if (rec.painting_id.empty()) throw SchemaError(file_row, "empty painting_id");
        if (rec.artist_id.empty()) throw SchemaError(file_row, "empty artist_id");
        if (rec.file_path.empty()) throw SchemaError(file_row, "empty file_path");
        if (!seen.insert(rec.painting_id).second) {
            throw DuplicateId("duplicate painting_id '" + rec.painting_id + "' at row " +
                              std::to_string(file_row));
        }
        check_year(rec, get(row, "year"), file_row, data.issues);
        data.records.push_back(std::move(rec));
    }
    return data;
}

ManifestData load_jsonl_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open manifest: " + path.string());

    ManifestData data;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t file_row = 0;
    while (std::getline(in, line)) {
        ++file_row;
        if (trim(line).empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError(file_row, std::string("invalid json: ") + e.what());
        }
        if (!j.is_object()) throw SchemaError(file_row, "expected a json object");

        auto str = [&](const char* key) -> std::string {
            if (!j.contains(key)) return "";
            const auto& v = j.at(key);
            return v.is_string() ? v.get<std::string>() : "";
        };

        PaintingRecord rec;
        rec.painting_id = trim(str("painting_id"));
        rec.artist_id = trim(str("artist_id"));
        rec.artist_name = str("artist_name");
        rec.title = str("title");
        rec.technique = trim(str("technique"));
        rec.genre = trim(str("genre"));
        rec.dataset = trim(str("dataset"));
        rec.file_path = trim(str("file_path"));
        if (rec.painting_id.empty()) throw SchemaError(file_row, "missing painting_id");
        if (rec.artist_id.empty()) throw SchemaError(file_row, "missing artist_id");
        if (rec.file_path.empty()) throw SchemaError(file_row, "missing file_path");
        if (!seen.insert(rec.painting_id).second) {
            throw DuplicateId("duplicate painting_id '" + rec.painting_id + "' at row " +
                              std::to_string(file_row));
        }
        std::string year_raw;
        if (j.contains("year")) {
            const auto& y = j.at("year");
            if (y.is_number_integer()) year_raw = std::to_string(y.get<long>());
            else if (y.is_string()) year_raw = y.get<std::string>();
        }
        check_year(rec, year_raw, file_row, data.issues);
        data.records.push_back(std::move(rec));
    }
    return data;
}

}  // namespace

ManifestData load_manifest(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".jsonl" || ext == ".ndjson") return load_jsonl_manifest(path);
    return load_csv_manifest(path);
}

}  // namespace seams
