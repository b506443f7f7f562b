#pragma once

// JSON ingestion and export of character tables.
//
//   { "group_name": str, "order": int,
//     "classes": [ {"name", "size", "element_order", "label"?} ... ],
//     "characters": [ {"name", "values": [CycValue ...]} ... ],
//     "metadata": { "solvable"?, "nilpotent"?, "abelian_by_metanilpotent"?,
//                   "fitting_height"?, "r_value"?, "simple"?, "notes"? } }

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "chartable.hpp"
#include "errors.hpp"
#include "json.hpp"

namespace charzero {

inline nlohmann::json table_to_json(const CharacterTable& t) {
    using nlohmann::json;
    json classes = json::array();
    for (const auto& c : t.classes) {
        json jc = {{"name", c.name}, {"size", detail::bigint_json(c.size)}, {"element_order", c.element_order}};
        if (c.label) jc["label"] = *c.label;
        classes.push_back(std::move(jc));
    }
    json chars = json::array();
    for (const auto& chi : t.characters) chars.push_back({{"name", chi.name}, {"values", chi.values}});

    json meta = json::object();
    const auto& m = t.metadata;
    if (m.solvable) meta["solvable"] = *m.solvable;
    if (m.nilpotent) meta["nilpotent"] = *m.nilpotent;
    if (m.abelian_by_metanilpotent) meta["abelian_by_metanilpotent"] = *m.abelian_by_metanilpotent;
    if (m.fitting_height) meta["fitting_height"] = *m.fitting_height;
    if (m.r_value) meta["r_value"] = *m.r_value;
    if (m.simple) meta["simple"] = *m.simple;
    if (m.notes) meta["notes"] = *m.notes;

    return {{"group_name", t.group_name},
            {"order", detail::bigint_json(t.order)},
            {"classes", std::move(classes)},
            {"characters", std::move(chars)},
            {"metadata", std::move(meta)}};
}

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) throw SchemaError(path + key, "missing required field");
    return obj.at(key);
}

template <typename T>
T read_as(const nlohmann::json& j, const std::string& path) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(path, e.what());
    }
}

inline BigInt read_bigint(const nlohmann::json& j, const std::string& path) {
    try {
        return bigint_from_json(j);
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
}

template <typename T>
void read_optional(const nlohmann::json& meta, const char* key, std::optional<T>& out) {
    if (meta.contains(key) && !meta.at(key).is_null()) out = read_as<T>(meta.at(key), std::string("metadata.") + key);
}

} // namespace detail

/// Parses a table; the identity class is moved to the front if it is stored elsewhere.
inline CharacterTable table_from_json(const nlohmann::json& j) {
    using detail::read_as;
    using detail::require;
    if (!j.is_object()) throw SchemaError("<root>", "expected an object");
    CharacterTable t;
    t.group_name = read_as<std::string>(require(j, "group_name", ""), "group_name");
    t.order = detail::read_bigint(require(j, "order", ""), "order");

    const auto& classes = require(j, "classes", "");
    if (!classes.is_array()) throw SchemaError("classes", "expected an array");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::string p = "classes[" + std::to_string(i) + "].";
        const auto& jc = classes[i];
        ConjClass c;
        c.name = read_as<std::string>(require(jc, "name", p), p + "name");
        c.size = detail::read_bigint(require(jc, "size", p), p + "size");
        c.element_order = read_as<long long>(require(jc, "element_order", p), p + "element_order");
        if (jc.contains("label") && !jc.at("label").is_null()) {
            try {
                c.label = jc.at("label").get<Partition>();
            } catch (const std::exception& e) {
                throw SchemaError(p + "label", e.what());
            }
        }
        t.classes.push_back(std::move(c));
    }

    const auto& chars = require(j, "characters", "");
    if (!chars.is_array()) throw SchemaError("characters", "expected an array");
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const std::string p = "characters[" + std::to_string(i) + "].";
        const auto& jc = chars[i];
        const auto name = read_as<std::string>(require(jc, "name", p), p + "name");
        const auto& vals = require(jc, "values", p);
        if (!vals.is_array() || vals.size() != t.classes.size())
            throw SchemaError(p + "values", "expected " + std::to_string(t.classes.size()) + " values");
        std::vector<Cyclotomic> values;
        for (std::size_t c = 0; c < vals.size(); ++c) {
            try {
                values.push_back(vals[c].get<Cyclotomic>());
            } catch (const std::exception& e) {
                throw SchemaError(p + "values[" + std::to_string(c) + "]", e.what());
            }
        }
        t.characters.emplace_back(name, std::move(values));
    }

    if (j.contains("metadata")) {
        const auto& meta = j.at("metadata");
        if (!meta.is_object()) throw SchemaError("metadata", "expected an object");
        auto& m = t.metadata;
        detail::read_optional(meta, "solvable", m.solvable);
        detail::read_optional(meta, "nilpotent", m.nilpotent);
        detail::read_optional(meta, "abelian_by_metanilpotent", m.abelian_by_metanilpotent);
        detail::read_optional(meta, "fitting_height", m.fitting_height);
        detail::read_optional(meta, "r_value", m.r_value);
        detail::read_optional(meta, "simple", m.simple);
        detail::read_optional(meta, "notes", m.notes);
    }

    std::vector<std::size_t> identity;
    for (std::size_t c = 0; c < t.classes.size(); ++c)
        if (t.classes[c].element_order == 1) identity.push_back(c);
    if (identity.size() == 1 && identity[0] != 0) {
        const std::size_t k = identity[0];
        std::rotate(t.classes.begin(), t.classes.begin() + static_cast<std::ptrdiff_t>(k),
                    t.classes.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        for (auto& chi : t.characters) {
            std::rotate(chi.values.begin(), chi.values.begin() + static_cast<std::ptrdiff_t>(k),
                        chi.values.begin() + static_cast<std::ptrdiff_t>(k) + 1);
            chi.refresh_degree();
        }
    }
    for (std::size_t i = 0; i < t.characters.size(); ++i) {
        const auto& v = t.characters[i].values;
        if (!v.empty() && !v.front().is_integer())
            throw SchemaError("characters[" + std::to_string(i) + "].values[0]", "identity value must be a rational integer");
    }
    return t;
}

inline CharacterTable parse_table(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    return table_from_json(j);
}

inline CharacterTable load_table(const std::filesystem::path& path, bool check = false) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    CharacterTable t = parse_table(buf.str());
    if (check) {
        const auto rep = validate(t);
        if (!rep.ok()) throw ValidationError(path.string() + " failed validation:\n" + rep.summary());
    }
    return t;
}

inline void save_table(const CharacterTable& t, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << table_to_json(t).dump(1) << "\n";
}

} // namespace charzero
