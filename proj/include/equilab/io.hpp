#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace equilab::io {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { Csv, Json };

// Uniform output document: metadata plus a rectangular row set. CSV renders
// metadata as '#'-prefixed comment lines; JSON as {"meta": ..., "rows": ...}
// with identical column names. Cells are JSON values; absent optionals are
// null (empty field in CSV).
struct Table {
    std::vector<std::pair<std::string, nlohmann::json>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;

    void add_meta(const std::string& key, nlohmann::json value) {
        meta.emplace_back(key, std::move(value));
    }
};

std::string format_double(double v);

void write_table(const Table& table, Format format, std::ostream& os);

}  // namespace equilab::io
