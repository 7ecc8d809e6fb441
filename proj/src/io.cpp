#include "equilab/io.hpp"

#include <cstdio>
#include <ostream>

namespace equilab::io {

std::string format_double(double v) {
    if (v == 0.0) return "0";  // avoid the negative-zero artifact
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string csv_cell(const nlohmann::json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_double(v.get<double>());
    return v.dump();
}

}  // namespace

void write_table(const Table& table, Format format, std::ostream& os) {
    if (format == Format::Json) {
        nlohmann::json meta = nlohmann::json::object();
        for (const auto& [k, v] : table.meta) meta[k] = v;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table.rows) {
            nlohmann::json obj = nlohmann::json::object();
            for (std::size_t i = 0; i < table.columns.size(); ++i)
                obj[table.columns[i]] = row[i];
            rows.push_back(std::move(obj));
        }
        nlohmann::json doc;
        doc["meta"] = std::move(meta);
        doc["rows"] = std::move(rows);
        os << doc.dump(2) << "\n";
        return;
    }
    for (const auto& [k, v] : table.meta)
        os << "# " << k << "=" << csv_cell(v) << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << table.columns[i] << (i + 1 < table.columns.size() ? "," : "");
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << csv_cell(row[i]) << (i + 1 < row.size() ? "," : "");
        os << "\n";
    }
}

}  // namespace equilab::io
