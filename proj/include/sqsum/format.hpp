#pragma once

// Text serializations: search rows as CSV / JSON, GAP matches as JSON lines.

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqsum/constructions.hpp"
#include "sqsum/zp.hpp"

namespace sqsum {

inline constexpr const char* kSearchCsvHeader = "n,p,minimum,witness,nodes,exact";

inline std::string join_residues(const std::vector<std::uint64_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(xs[i]);
    }
    return out;
}

inline std::string csv_row(const SearchResult& r) {
    std::ostringstream os;
    os << r.n << ',' << r.p << ',' << r.minimum << ',' << join_residues(r.witness) << ','
       << r.nodes_explored << ',' << (r.exact ? "true" : "false");
    return os.str();
}

/// Error rows keep the column layout with empty minimum and witness.
inline std::string csv_row(std::uint64_t n, const TableRow& row) {
    if (row.result) return csv_row(*row.result);
    return std::to_string(n) + "," + std::to_string(row.p) + ",,,0,false";
}

inline nlohmann::json to_json(const SearchResult& r) {
    return {{"n", r.n},
            {"p", r.p},
            {"minimum", r.minimum},
            {"witness", r.witness},
            {"nodes", r.nodes_explored},
            {"exact", r.exact}};
}

inline nlohmann::json to_json(std::uint64_t n, const TableRow& row) {
    if (row.result) return to_json(*row.result);
    return {{"n", n},        {"p", row.p},    {"minimum", nullptr}, {"witness", nlohmann::json::array()},
            {"nodes", 0},    {"exact", false}, {"error", row.error}};
}

/// One parsed CSV search row.
struct SearchCsvRow {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::optional<std::uint64_t> minimum;
    std::vector<std::uint64_t> witness;
    std::uint64_t nodes = 0;
    bool exact = false;
};

inline std::vector<SearchCsvRow> read_search_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSearchCsvHeader)
        throw std::invalid_argument("search CSV: missing header");
    std::vector<SearchCsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (line.back() == ',') f.emplace_back();
        if (f.size() != 6) throw std::invalid_argument("search CSV: expected 6 fields in '" + line + "'");

        SearchCsvRow r;
        r.n = std::stoull(f[0]);
        r.p = std::stoull(f[1]);
        if (!f[2].empty()) r.minimum = std::stoull(f[2]);
        std::stringstream ws(f[3]);
        for (std::string w; std::getline(ws, w, ';');) r.witness.push_back(std::stoull(w));
        r.nodes = std::stoull(f[4]);
        r.exact = f[5] == "true";
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace detail {
inline nlohmann::json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}
}  // namespace detail

inline nlohmann::json to_json(const GapMatch& m) {
    nlohmann::json steps = nlohmann::json::array(), elements = nlohmann::json::array();
    for (const auto& s : m.gap.steps) steps.push_back(detail::integer_json(s));
    for (const auto& e : m.elements) elements.push_back(detail::integer_json(e));
    return {{"base", detail::integer_json(m.gap.base)},
            {"steps", steps},
            {"sizes", m.gap.sizes},
            {"elements", elements},
            {"square_count", m.square_count}};
}

}  // namespace sqsum
