#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hypergraph.hpp"
#include "rational.hpp"

namespace hyperoperad {

inline const char* flavor_name(Kind k) {
    switch (k) {
    case Kind::GraEven: return "gra_even";
    case Kind::GraOdd: return "gra_odd";
    case Kind::Hgra: return "hgra";
    case Kind::BVHgra: return "bvhgra";
    case Kind::FBVH: return "fbvh";
    case Kind::Forest: return "forest";
    case Kind::FhGC: return "fhgc";
    case Kind::Hgraphs: return "hgraphs";
    case Kind::GC: return "gc";
    }
    return "?";
}

inline bool flavor_has_d(Kind k) {
    return k == Kind::GraEven || k == Kind::GraOdd || k == Kind::Hgra || k == Kind::FhGC ||
           k == Kind::Hgraphs || k == Kind::GC;
}

inline std::optional<Kind> flavor_from_name(const std::string& s) {
    for (Kind k : {Kind::GraEven, Kind::GraOdd, Kind::Hgra, Kind::BVHgra, Kind::FBVH,
                   Kind::Forest, Kind::FhGC, Kind::Hgraphs, Kind::GC})
        if (s == flavor_name(k)) return k;
    return std::nullopt;
}

inline std::string vertex_token(V v) {
    return (is_white(v) ? "w" : "b") + std::to_string(v.idx);
}

// One graph per line; the field order and spacing are fixed so that the
// serialization of a canonical form is bit-exact.
inline std::string serialize(const Hypergraph& g, const Rational* coeff = nullptr) {
    std::ostringstream os;
    os << "{\"flavor\":\"" << flavor_name(g.flavor.kind) << "\"";
    if (flavor_has_d(g.flavor.kind)) os << ",\"d\":" << g.flavor.d;
    os << ",\"arity\":" << g.n_white << ",\"blacks\":" << g.n_black << ",\"edges\":[";
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (e) os << ",";
        os << "[\"" << vertex_token(g.edges[e][0]) << "\",\"" << vertex_token(g.edges[e][1])
           << "\"]";
    }
    os << "],\"hyperedges\":[";
    for (size_t h = 0; h < g.hyperedges.size(); ++h) {
        if (h) os << ",";
        os << "[";
        for (int s = 0; s < 3; ++s)
            os << (s ? "," : "") << "\"" << vertex_token(g.hyperedges[h][s]) << "\"";
        os << "]";
    }
    os << "]";
    if (coeff) os << ",\"coeff\":\"" << to_string(*coeff) << "\"";
    os << "}";
    return os.str();
}

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline V parse_vertex(const std::string& tok, const Hypergraph& g, const std::string& where) {
    if (tok.size() < 2 || (tok[0] != 'w' && tok[0] != 'b'))
        throw ParseError(where + ": bad endpoint '" + tok + "' (expect w<i> or b<j>)");
    int idx;
    try {
        idx = std::stoi(tok.substr(1));
    } catch (...) {
        throw ParseError(where + ": bad endpoint index in '" + tok + "'");
    }
    V v = tok[0] == 'w' ? white(idx) : black(idx);
    if (is_white(v) && (idx < 0 || idx >= g.n_white))
        throw ParseError(where + ": endpoint '" + tok + "' out of range for arity " +
                         std::to_string(g.n_white));
    if (is_black(v) && (idx < 0 || idx >= g.n_black))
        throw ParseError(where + ": endpoint '" + tok + "' out of range for " +
                         std::to_string(g.n_black) + " black vertices");
    return v;
}
} // namespace detail

struct ParsedGraph {
    Hypergraph graph;
    Rational coeff = 1;
};

inline ParsedGraph deserialize(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    ParsedGraph out;
    Hypergraph& g = out.graph;
    if (!j.contains("flavor") || !j["flavor"].is_string())
        throw ParseError("field 'flavor': missing or not a string");
    auto k = flavor_from_name(j["flavor"].get<std::string>());
    if (!k) throw ParseError("field 'flavor': unknown flavor '" + j["flavor"].get<std::string>() + "'");
    g.flavor.kind = *k;
    if (flavor_has_d(*k)) {
        if (!j.contains("d") || !j["d"].is_number_integer())
            throw ParseError("field 'd': required for flavor " + std::string(flavor_name(*k)));
        g.flavor.d = j["d"].get<int>();
    }
    auto get_int = [&](const char* f) {
        if (!j.contains(f) || !j[f].is_number_integer())
            throw ParseError(std::string("field '") + f + "': missing or not an integer");
        return j[f].get<int>();
    };
    g.n_white = get_int("arity");
    g.n_black = get_int("blacks");
    if (g.n_white < 0 || g.n_black < 0) throw ParseError("negative vertex count");
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("field 'edges': not an array");
        int e = 0;
        for (const auto& je : j["edges"]) {
            std::string where = "edge " + std::to_string(e++);
            if (!je.is_array() || je.size() != 2)
                throw ParseError(where + ": expected a pair of endpoints");
            g.edges.push_back({detail::parse_vertex(je[0].get<std::string>(), g, where),
                               detail::parse_vertex(je[1].get<std::string>(), g, where)});
        }
    }
    if (j.contains("hyperedges")) {
        if (!j["hyperedges"].is_array()) throw ParseError("field 'hyperedges': not an array");
        int h = 0;
        for (const auto& jh : j["hyperedges"]) {
            std::string where = "hyperedge " + std::to_string(h++);
            if (!jh.is_array() || jh.size() != 3)
                throw ParseError(where + ": hyperedge not trivalent");
            Hyperedge he;
            for (int s = 0; s < 3; ++s)
                he[s] = detail::parse_vertex(jh[s].get<std::string>(), g, where);
            g.hyperedges.push_back(he);
        }
    }
    if (j.contains("coeff")) {
        if (!j["coeff"].is_string()) throw ParseError("field 'coeff': expected string \"p/q\"");
        out.coeff = parse_rational(j["coeff"].get<std::string>());
    }
    return out;
}

} // namespace hyperoperad
