#pragma once

// Matroid file ingestion. Two formats are accepted:
//   * a JSON array of entries {"name": ..., "n": ..., "bases": [[...], ...]}
//   * a line format  "name k n : b1,b2 ; b1,b2 ; ..."
// Elements are 1-based in files and 0-based in memory; the shift happens
// here and nowhere else. Every entry is validated through from_bases; the
// diagnostics carry the file name and line.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "invz/errors.hpp"
#include "invz/matroid.hpp"

namespace invz {

struct MatroidFileEntry {
    std::string name;
    int n = 0;
    std::vector<std::vector<int>> bases;  // 1-based elements
};

inline Matroid entry_to_matroid(const MatroidFileEntry& e, const std::string& where) {
    std::vector<std::vector<int>> shifted;
    shifted.reserve(e.bases.size());
    for (const auto& b : e.bases) {
        std::vector<int> row;
        row.reserve(b.size());
        for (int v : b) {
            if (v < 1 || v > e.n)
                throw_validation(errc::parse_error, where + ": element " + std::to_string(v) +
                                                       " outside 1.." + std::to_string(e.n));
            row.push_back(v - 1);
        }
        shifted.push_back(std::move(row));
    }
    try {
        return from_bases(e.n, shifted, e.name);
    } catch (const ValidationError& err) {
        throw ValidationError(err.code(), where + " ('" + e.name + "'): " + err.what());
    }
}

inline MatroidFileEntry entry_from_matroid(const Matroid& m) {
    MatroidFileEntry e;
    e.name = m.label();
    e.n = m.size();
    for (Mask b : m.bases()) {
        std::vector<int> row;
        for (int x : elements_of(b)) row.push_back(x + 1);
        e.bases.push_back(std::move(row));
    }
    return e;
}

inline nlohmann::json entry_to_json(const MatroidFileEntry& e) {
    nlohmann::json j;
    j["name"] = e.name;
    j["n"] = e.n;
    j["bases"] = e.bases;
    return j;
}

namespace detail {

inline MatroidFileEntry entry_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) throw_validation(errc::parse_error, where + ": entry is not an object");
    MatroidFileEntry e;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw_validation(errc::parse_error, where + ": 'name' must be a string");
        e.name = j["name"].get<std::string>();
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw_validation(errc::parse_error, where + ": missing integer field 'n'");
    e.n = j["n"].get<int>();
    if (!j.contains("bases") || !j["bases"].is_array())
        throw_validation(errc::parse_error, where + ": missing array field 'bases'");
    for (const auto& row : j["bases"]) {
        if (!row.is_array()) throw_validation(errc::parse_error, where + ": basis is not a list");
        std::vector<int> b;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw_validation(errc::parse_error, where + ": basis element is not an integer");
            b.push_back(v.get<int>());
        }
        e.bases.push_back(std::move(b));
    }
    return e;
}

inline std::vector<int> parse_int_list(const std::string& text, char sep,
                                       const std::string& where) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, sep)) {
        std::size_t begin = piece.find_first_not_of(" \t");
        std::size_t end = piece.find_last_not_of(" \t");
        if (begin == std::string::npos) continue;
        piece = piece.substr(begin, end - begin + 1);
        try {
            std::size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw_validation(errc::parse_error, where + ": bad integer '" + piece + "'");
        }
    }
    return out;
}

}  // namespace detail

/// Parse matroids from file contents. `source` names the file for
/// diagnostics. Entries whose canonical key repeats are dropped with a
/// warning on `diag`.
inline std::vector<Matroid> parse_catalog_text(const std::string& content,
                                               const std::string& source,
                                               std::ostream* diag = nullptr) {
    std::vector<Matroid> out;
    std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (content[first] == '[' || content[first] == '{')) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw_validation(errc::parse_error, source + ": " + e.what());
        }
        if (!j.is_array()) throw_validation(errc::parse_error, source + ": expected a JSON array");
        int idx = 0;
        for (const auto& item : j) {
            std::string where = source + "[" + std::to_string(idx++) + "]";
            out.push_back(entry_to_matroid(detail::entry_from_json(item, where), where));
        }
    } else {
        std::stringstream ss(content);
        std::string line;
        int lineno = 0;
        while (std::getline(ss, line)) {
            ++lineno;
            std::string where = source + ":" + std::to_string(lineno);
            std::size_t begin = line.find_first_not_of(" \t\r");
            if (begin == std::string::npos || line[begin] == '#') continue;
            std::size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw_validation(errc::parse_error, where + ": missing ':' separator");
            std::stringstream head(line.substr(0, colon));
            MatroidFileEntry e;
            int k = -1;
            if (!(head >> e.name >> k >> e.n))
                throw_validation(errc::parse_error, where + ": header must be 'name k n'");
            std::string tail;
            if (head >> tail)
                throw_validation(errc::parse_error, where + ": unexpected token '" + tail + "'");
            std::stringstream body(line.substr(colon + 1));
            std::string basis_text;
            while (std::getline(body, basis_text, ';')) {
                auto b = detail::parse_int_list(basis_text, ',', where);
                if (!b.empty()) e.bases.push_back(std::move(b));
            }
            Matroid m = entry_to_matroid(e, where);
            if (m.rank() != k)
                throw_validation(errc::validation,
                                 where + ": declared rank " + std::to_string(k) +
                                     " but bases have rank " + std::to_string(m.rank()));
            out.push_back(std::move(m));
        }
    }
    // Deduplicate identical matroids (same canonical key), keeping the first.
    std::vector<Matroid> unique;
    std::vector<std::string> keys;
    for (auto& m : out) {
        std::string key = canonical_key(m);
        bool dup = false;
        for (const auto& k2 : keys)
            if (k2 == key) {
                dup = true;
                break;
            }
        if (dup) {
            if (diag)
                (*diag) << "warning: " << source << ": duplicate matroid '" << m.label()
                        << "' dropped\n";
            continue;
        }
        keys.push_back(std::move(key));
        unique.push_back(std::move(m));
    }
    return unique;
}

inline std::vector<Matroid> parse_catalog(const std::string& path, std::ostream* diag = nullptr) {
    std::ifstream in(path);
    if (!in) throw_validation(errc::parse_error, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_catalog_text(buf.str(), path, diag);
}

}  // namespace invz
