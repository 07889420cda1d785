#pragma once

#include "ltskit/lts.hpp"

#include <json.hpp>

#include <fstream>

namespace ltskit {

/// Raised for anything wrong with an input document: malformed JSON, schema
/// violations, duplicate bracket triples, bad scalar literals.
class LtsParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_keys(const nlohmann::json& obj, std::initializer_list<const char*> keys,
                         const std::string& where) {
    for (const char* k : keys)
        if (!obj.contains(k)) throw LtsParseError(where + ": missing key '" + k + "'");
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* want : keys)
            if (k == want) known = true;
        if (!known) throw LtsParseError(where + ": unknown key '" + k + "'");
    }
}

inline FieldSpec field_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw LtsParseError("field: expected an object");
    const std::string kind = j.value("kind", "");
    if (kind == "Q") {
        require_keys(j, {"kind"}, "field");
        return FieldSpec::rationals();
    }
    if (kind == "GF") {
        require_keys(j, {"kind", "p"}, "field");
        if (!j["p"].is_number_unsigned()) throw LtsParseError("field: 'p' must be a positive integer");
        try {
            return FieldSpec::gf(j["p"].get<std::uint64_t>());
        } catch (const std::invalid_argument& e) {
            throw LtsParseError(std::string("field: ") + e.what());
        }
    }
    throw LtsParseError("field: 'kind' must be \"Q\" or \"GF\"");
}

}  // namespace detail

/// Reads the LTS document schema:
///   {"name": str, "field": {"kind":"Q"}|{"kind":"GF","p":int}, "dim": int,
///    "brackets": [{"i":int,"j":int,"k":int,"value":[str,...]}]}
/// Entries require i < j; unlisted triples are zero.
inline LieTripleSystem lts_from_json(const nlohmann::json& j, bool allow_small_char = false) {
    if (!j.is_object()) throw LtsParseError("document: expected an object");
    detail::require_keys(j, {"name", "field", "dim", "brackets"}, "document");
    if (!j["name"].is_string()) throw LtsParseError("document: 'name' must be a string");
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::uint64_t>() == 0)
        throw LtsParseError("document: 'dim' must be a positive integer");
    const FieldSpec field = detail::field_from_json(j["field"]);
    const auto dim = j["dim"].get<std::size_t>();
    if (!j["brackets"].is_array()) throw LtsParseError("document: 'brackets' must be an array");
    std::vector<BracketEntry> entries;
    for (const auto& b : j["brackets"]) {
        if (!b.is_object()) throw LtsParseError("brackets: expected objects");
        detail::require_keys(b, {"i", "j", "k", "value"}, "bracket entry");
        for (const char* idx : {"i", "j", "k"})
            if (!b[idx].is_number_unsigned()) throw LtsParseError("bracket entry: indices must be non-negative");
        if (!b["value"].is_array()) throw LtsParseError("bracket entry: 'value' must be an array");
        BracketEntry e;
        e.i = b["i"].get<std::size_t>();
        e.j = b["j"].get<std::size_t>();
        e.k = b["k"].get<std::size_t>();
        for (const auto& s : b["value"]) {
            if (!s.is_string()) throw LtsParseError("bracket entry: values must be scalar strings");
            try {
                e.value.push_back(Scalar::parse(field, s.get<std::string>()));
            } catch (const std::invalid_argument& err) {
                throw LtsParseError(std::string("bracket entry: ") + err.what());
            }
        }
        entries.push_back(std::move(e));
    }
    try {
        return LieTripleSystem::from_entries(j["name"].get<std::string>(), field, dim, entries,
                                             allow_small_char);
    } catch (const std::invalid_argument& err) {
        throw LtsParseError(err.what());
    }
}

/// Canonical serialization: brackets sorted by (i,j,k) with i < j, zero
/// values omitted, scalars as exact literals. Emitting, parsing, and emitting
/// again is byte-identical.
inline nlohmann::ordered_json lts_to_json(const LieTripleSystem& t) {
    nlohmann::ordered_json j;
    j["name"] = t.name();
    if (t.field().kind == FieldKind::Rationals) {
        j["field"] = {{"kind", "Q"}};
    } else {
        j["field"] = nlohmann::ordered_json{{"kind", "GF"}, {"p", t.field().p}};
    }
    j["dim"] = t.dim();
    nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t jj = i + 1; jj < t.dim(); ++jj)
            for (std::size_t k = 0; k < t.dim(); ++k) {
                if (!t.basis_bracket_nonzero(i, jj, k)) continue;
                nlohmann::ordered_json entry;
                entry["i"] = i;
                entry["j"] = jj;
                entry["k"] = k;
                nlohmann::ordered_json value = nlohmann::ordered_json::array();
                for (std::size_t l = 0; l < t.dim(); ++l) value.push_back(t.c(i, jj, k, l).str());
                entry["value"] = std::move(value);
                brackets.push_back(std::move(entry));
            }
    j["brackets"] = std::move(brackets);
    return j;
}

inline std::string lts_to_string(const LieTripleSystem& t) { return lts_to_json(t).dump(2) + "\n"; }

inline LieTripleSystem lts_from_string(const std::string& text, bool allow_small_char = false) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw LtsParseError(std::string("document: ") + e.what());
    }
    return lts_from_json(j, allow_small_char);
}

inline LieTripleSystem load_lts_file(const std::string& path, bool allow_small_char = false) {
    std::ifstream in(path);
    if (!in) throw LtsParseError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return lts_from_string(text, allow_small_char);
}

inline void save_lts_file(const LieTripleSystem& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << lts_to_string(t);
}

}  // namespace ltskit
