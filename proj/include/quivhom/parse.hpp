#pragma once

// Parsing of algebra documents:
//   {"field":{"prime":101},
//    "quiver":{"vertices":2,"arrows":[{"name":"a","source":1,"target":2}]},
//    "relations":[["a","b"]]}
// Vertices are 1-based, a relation lists arrow names composed left to
// right. Unknown keys are rejected; errors carry the offending field path.

#include "quivhom/algebra.hpp"

#include <json.hpp>

namespace quivhom {

struct ParseError : std::runtime_error {
    std::string where;
    ParseError(std::string where_, const std::string& what_)
        : std::runtime_error(where_ + ": " + what_), where(std::move(where_)) {}
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, const std::string& where,
                                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            ok = ok || it.key() == k;
        if (!ok)
            throw ParseError(where, "unknown key \"" + it.key() + "\"");
    }
}

} // namespace detail

inline Algebra parse_algebra_spec(const std::string& text, const PrimeField& default_field,
                                  int max_path_len = 64) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("$", e.what());
    }
    if (!doc.is_object())
        throw ParseError("$", "document must be a JSON object");
    detail::reject_unknown_keys(doc, "$", {"field", "quiver", "relations"});

    PrimeField field = default_field;
    if (doc.contains("field")) {
        const auto& f = doc["field"];
        if (!f.is_object())
            throw ParseError("field", "must be an object");
        detail::reject_unknown_keys(f, "field", {"prime"});
        if (!f.contains("prime") || !f["prime"].is_number_unsigned())
            throw ParseError("field.prime", "must be an unsigned integer");
        try {
            field = PrimeField(f["prime"].get<std::uint32_t>());
        } catch (const std::invalid_argument& e) {
            throw ParseError("field.prime", e.what());
        }
    }

    if (!doc.contains("quiver") || !doc["quiver"].is_object())
        throw ParseError("quiver", "required object");
    const auto& q = doc["quiver"];
    detail::reject_unknown_keys(q, "quiver", {"vertices", "arrows"});
    if (!q.contains("vertices") || !q["vertices"].is_number_unsigned() ||
        q["vertices"].get<int>() < 1)
        throw ParseError("quiver.vertices", "must be a positive integer");
    const int n = q["vertices"].get<int>();
    if (!q.contains("arrows") || !q["arrows"].is_array())
        throw ParseError("quiver.arrows", "required array");

    std::vector<Arrow> arrows;
    std::map<std::string, int> by_name;
    int id = 0;
    for (const auto& ja : q["arrows"]) {
        const std::string where = "quiver.arrows[" + std::to_string(id) + "]";
        if (!ja.is_object())
            throw ParseError(where, "must be an object");
        detail::reject_unknown_keys(ja, where, {"name", "source", "target"});
        if (!ja.contains("name") || !ja["name"].is_string() || ja["name"].get<std::string>().empty())
            throw ParseError(where + ".name", "must be a nonempty string");
        std::string name = ja["name"].get<std::string>();
        if (by_name.count(name))
            throw ParseError(where + ".name", "duplicate arrow name \"" + name + "\"");
        for (const char* key : {"source", "target"}) {
            if (!ja.contains(key) || !ja[key].is_number_unsigned() || ja[key].get<int>() < 1 ||
                ja[key].get<int>() > n)
                throw ParseError(where + "." + key, "must be a vertex in 1.." + std::to_string(n));
        }
        by_name[name] = id;
        arrows.push_back({id, ja["source"].get<int>(), ja["target"].get<int>(), std::move(name)});
        ++id;
    }
    Quiver quiver(n, std::move(arrows));

    std::vector<PathWord> relations;
    if (doc.contains("relations")) {
        if (!doc["relations"].is_array())
            throw ParseError("relations", "must be an array");
        int ri = 0;
        for (const auto& jr : doc["relations"]) {
            const std::string where = "relations[" + std::to_string(ri) + "]";
            if (!jr.is_array())
                throw ParseError(where, "must be an array of arrow names");
            PathWord w;
            int ai = 0;
            for (const auto& jn : jr) {
                if (!jn.is_string())
                    throw ParseError(where + "[" + std::to_string(ai) + "]", "must be a string");
                auto it = by_name.find(jn.get<std::string>());
                if (it == by_name.end())
                    throw ParseError(where + "[" + std::to_string(ai) + "]",
                                     "unknown arrow name \"" + jn.get<std::string>() + "\"");
                w.arrows.push_back(it->second);
                ++ai;
            }
            if (!w.arrows.empty())
                w.start_vertex = quiver.arrow(w.arrows[0]).source;
            relations.push_back(std::move(w));
            ++ri;
        }
    }
    if (quiver.arrow_count() == 0)
        throw NonSemisimpleError("the quiver has no arrows; the algebra is semisimple");
    return build_monomial_algebra(field, quiver, std::move(relations), max_path_len);
}

} // namespace quivhom
