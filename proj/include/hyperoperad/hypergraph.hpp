#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hyperoperad {

// A vertex reference: white vertices carry the operadic labels 0..n,
// black vertices are unlabelled (dense local ids 0..k-1).
struct V {
    int kind = 0; // 0 = white, 1 = black
    int idx = 0;
    auto operator<=>(const V&) const = default;
};

inline V white(int i) { return V{0, i}; }
inline V black(int j) { return V{1, j}; }
inline bool is_white(V v) { return v.kind == 0; }
inline bool is_black(V v) { return v.kind == 1; }

using Edge = std::array<V, 2>;
using Hyperedge = std::array<V, 3>; // the three flags of a star vertex, in order

enum class Kind {
    GraEven,  // graphs, d even: edges ordered (odd), undirected
    GraOdd,   // graphs, d odd: edges directed and ordered
    Hgra,     // labelled vertices, trivalent hyperedges only
    BVHgra,   // labelled white vertices, solid edges + trivalent hyperedges
    FBVH,     // white + black vertices, edges + hyperedges (admissible)
    Forest,   // FBVH modulo internal genus (generators are forests)
    FhGC,     // all-black hypergraphs (full hypergraph complex)
    Hgraphs,  // twisted Hgra: white + black vertices, hyperedges only
    GC,       // all-black ordinary graphs, directed edges (odd graph complex)
};

struct Flavor {
    Kind kind = Kind::FBVH;
    int d = 0; // parameter for Gra/Hgra/FhGC/Hgraphs/GC; unused otherwise
    auto operator<=>(const Flavor&) const = default;

    bool has_blacks() const {
        return kind == Kind::FBVH || kind == Kind::Forest || kind == Kind::FhGC ||
               kind == Kind::Hgraphs || kind == Kind::GC;
    }
    bool has_whites() const { return kind != Kind::FhGC && kind != Kind::GC; }
    bool edges_allowed() const {
        return kind == Kind::GraEven || kind == Kind::GraOdd || kind == Kind::BVHgra ||
               kind == Kind::FBVH || kind == Kind::Forest || kind == Kind::GC;
    }
    bool hypers_allowed() const {
        return kind == Kind::Hgra || kind == Kind::BVHgra || kind == Kind::FBVH ||
               kind == Kind::Forest || kind == Kind::FhGC || kind == Kind::Hgraphs;
    }
    // Orientation parity traits: which blocks consist of odd-degree objects.
    bool edges_odd() const {
        switch (kind) {
        case Kind::GraEven: return (1 - d) % 2 != 0;
        case Kind::GraOdd: return true; // ordered and directed, see below
        case Kind::GC: return false;    // directions only (standard d-odd rule)
        case Kind::BVHgra:
        case Kind::FBVH:
        case Kind::Forest: return true; // solid edges have degree -1
        default: return false;
        }
    }
    bool edges_directed() const { return kind == Kind::GraOdd || kind == Kind::GC; }
    bool flags_odd() const {
        switch (kind) {
        case Kind::Hgra:
        case Kind::FhGC:
        case Kind::Hgraphs: return d % 2 != 0; // flags have degree -d
        case Kind::BVHgra:
        case Kind::FBVH:
        case Kind::Forest: return true; // degree -1
        default: return false;
        }
    }
    bool stars_odd() const { return hypers_allowed(); } // 1+2d and +1 are odd
    bool blacks_odd() const {
        switch (kind) {
        case Kind::FBVH:
        case Kind::Forest: return true; // degree 3
        case Kind::FhGC:
        case Kind::Hgraphs:
        case Kind::GC: return d % 2 != 0; // degree d
        default: return false;
        }
    }
};

inline Flavor gra_even(int d) { return {Kind::GraEven, d}; }
inline Flavor gra_odd(int d) { return {Kind::GraOdd, d}; }
inline Flavor hgra(int d) { return {Kind::Hgra, d}; }
inline Flavor bvhgra() { return {Kind::BVHgra, 0}; }
inline Flavor fbvh() { return {Kind::FBVH, 0}; }
inline Flavor forest() { return {Kind::Forest, 0}; }
inline Flavor fhgc(int d) { return {Kind::FhGC, d}; }
inline Flavor hgraphs(int d) { return {Kind::Hgraphs, d}; }
inline Flavor gc(int d) { return {Kind::GC, d}; }

// A hypergraph with the implicit orientation: the listed order of edges,
// of hyperedges, of flags within each hyperedge and of black vertices IS
// the orientation datum (one det line per block, edges^flags^stars^blacks).
struct Hypergraph {
    Flavor flavor;
    int n_white = 0; // arity: white labels are 0..n_white-1
    int n_black = 0;
    std::vector<Edge> edges;
    std::vector<Hyperedge> hyperedges;

    auto operator<=>(const Hypergraph&) const = default;
};

// ---------------------------------------------------------------------------
// Attachments: everything incident to one vertex.

struct Att {
    int type; // 0 = edge endpoint, 1 = flag
    int index;
    int slot; // edge end 0/1 or flag position 0..2
    auto operator<=>(const Att&) const = default;
};

inline std::vector<Att> attachments_at(const Hypergraph& g, V v) {
    std::vector<Att> out;
    for (int e = 0; e < (int)g.edges.size(); ++e)
        for (int s = 0; s < 2; ++s)
            if (g.edges[e][s] == v) out.push_back({0, e, s});
    for (int h = 0; h < (int)g.hyperedges.size(); ++h)
        for (int s = 0; s < 3; ++s)
            if (g.hyperedges[h][s] == v) out.push_back({1, h, s});
    return out;
}

inline int valency(const Hypergraph& g, V v) { return (int)attachments_at(g, v).size(); }

// ---------------------------------------------------------------------------
// Internal structure: the graph left after erasing all white vertices.
// Nodes are black vertices, star vertices and solid edges; two nodes are
// adjacent when joined directly (a flag to a black, an edge end at a black).
// White vertices never join anything.

struct InternalStructure {
    // component id per black vertex / hyperedge / edge; -1 for none
    std::vector<int> black_comp, hyper_comp, edge_comp;
    int n_components = 0;
    // first Betti number per component (whites cut into leaves)
    std::vector<int> genus;
    // distinct white vertices touching each component
    std::vector<std::vector<int>> whites;
};

inline InternalStructure internal_structure(const Hypergraph& g) {
    int nb = g.n_black, nh = (int)g.hyperedges.size(), ne = (int)g.edges.size();
    int n = nb + nh + ne;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    auto node_black = [&](int j) { return j; };
    auto node_hyper = [&](int h) { return nb + h; };
    auto node_edge = [&](int e) { return nb + nh + e; };

    for (int h = 0; h < nh; ++h)
        for (V v : g.hyperedges[h])
            if (is_black(v)) join(node_hyper(h), node_black(v.idx));
    for (int e = 0; e < ne; ++e)
        for (V v : g.edges[e])
            if (is_black(v)) join(node_edge(e), node_black(v.idx));

    InternalStructure is;
    std::vector<int> comp_of(n, -1);
    int nc = 0;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (comp_of[r] < 0) comp_of[r] = nc++;
        comp_of[i] = comp_of[r];
    }
    is.n_components = nc;
    is.black_comp.resize(nb);
    is.hyper_comp.resize(nh);
    is.edge_comp.resize(ne);
    for (int j = 0; j < nb; ++j) is.black_comp[j] = comp_of[node_black(j)];
    for (int h = 0; h < nh; ++h) is.hyper_comp[h] = comp_of[node_hyper(h)];
    for (int e = 0; e < ne; ++e) is.edge_comp[e] = comp_of[node_edge(e)];

    // Betti numbers: cells with whites split into per-incidence leaves.
    std::vector<int> cells1(nc, 0), cells0(nc, 0);
    std::vector<std::vector<int>> wh(nc);
    for (int j = 0; j < nb; ++j) cells0[is.black_comp[j]]++;
    for (int h = 0; h < nh; ++h) {
        int c = is.hyper_comp[h];
        cells0[c]++; // the star
        cells1[c] += 3;
        for (V v : g.hyperedges[h])
            if (is_white(v)) {
                cells0[c]++;
                wh[c].push_back(v.idx);
            }
    }
    for (int e = 0; e < ne; ++e) {
        int c = is.edge_comp[e];
        cells1[c] += 1;
        for (V v : g.edges[e])
            if (is_white(v)) {
                cells0[c]++;
                wh[c].push_back(v.idx);
            }
    }
    is.genus.resize(nc);
    is.whites.resize(nc);
    for (int c = 0; c < nc; ++c) {
        is.genus[c] = cells1[c] - cells0[c] + 1;
        std::sort(wh[c].begin(), wh[c].end());
        wh[c].erase(std::unique(wh[c].begin(), wh[c].end()), wh[c].end());
        is.whites[c] = wh[c];
    }
    return is;
}

// ---------------------------------------------------------------------------
// Validation.

struct ValidateOptions {
    // 0 = structural admissibility only; k>0 additionally requires every
    // black vertex to have valency >= k (basis-level admissibility).
    int min_black_valency = 0;
};

inline std::vector<std::string> validate(const Hypergraph& g, ValidateOptions opt = {}) {
    std::vector<std::string> bad;
    auto in_range = [&](V v) {
        if (is_white(v)) return v.idx >= 0 && v.idx < g.n_white;
        return v.idx >= 0 && v.idx < g.n_black;
    };
    const Flavor& f = g.flavor;
    if (!f.has_whites() && g.n_white != 0) bad.push_back("flavor admits no white vertices");
    if (!f.has_blacks() && g.n_black != 0) bad.push_back("flavor admits no black vertices");
    if (!f.edges_allowed() && !g.edges.empty()) bad.push_back("flavor admits no solid edges");
    if (!f.hypers_allowed() && !g.hyperedges.empty()) bad.push_back("flavor admits no hyperedges");

    for (int e = 0; e < (int)g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        if (!in_range(ed[0]) || !in_range(ed[1])) {
            bad.push_back("edge " + std::to_string(e) + ": endpoint out of range");
            continue;
        }
        if (ed[0] == ed[1]) bad.push_back("edge " + std::to_string(e) + ": tadpole");
        if ((f.kind == Kind::FBVH || f.kind == Kind::Forest) && is_black(ed[0]) && is_black(ed[1]))
            bad.push_back("edge " + std::to_string(e) + ": joins two black vertices");
    }
    for (int h = 0; h < (int)g.hyperedges.size(); ++h) {
        const Hyperedge& he = g.hyperedges[h];
        bool ok = true;
        for (V v : he)
            if (!in_range(v)) {
                bad.push_back("hyperedge " + std::to_string(h) + ": endpoint out of range");
                ok = false;
            }
        if (!ok) continue;
        if (he[0] == he[1] || he[0] == he[2] || he[1] == he[2])
            bad.push_back("hyperedge " + std::to_string(h) + ": two flags on one vertex");
        if ((f.kind == Kind::FBVH || f.kind == Kind::Forest || f.kind == Kind::BVHgra ||
             f.kind == Kind::Hgraphs) &&
            !is_white(he[0]) && !is_white(he[1]) && !is_white(he[2]))
            bad.push_back("hyperedge " + std::to_string(h) + ": hyperedge without white flag");
    }
    if (!bad.empty()) return bad;

    if (f.kind == Kind::FBVH || f.kind == Kind::Forest || f.kind == Kind::Hgraphs) {
        InternalStructure is = internal_structure(g);
        for (int j = 0; j < g.n_black; ++j)
            if ((int)is.whites[is.black_comp[j]].size() < 2)
                bad.push_back("black vertex " + std::to_string(j) +
                              ": reaches fewer than 2 white vertices");
        if (f.kind == Kind::Forest)
            for (int c = 0; c < is.n_components; ++c)
                if (is.genus[c] > 0) bad.push_back("internal component has positive genus");
    }
    if (opt.min_black_valency > 0)
        for (int j = 0; j < g.n_black; ++j)
            if (valency(g, black(j)) < opt.min_black_valency)
                bad.push_back("black vertex " + std::to_string(j) + ": black valency < " +
                              std::to_string(opt.min_black_valency));
    return bad;
}

inline bool is_valid(const Hypergraph& g, ValidateOptions opt = {}) {
    return validate(g, opt).empty();
}

// Basis-level admissibility: structural rules plus the valency restriction
// used to enumerate graded bases (>=3-valent black vertices; hGC^{>=2} uses 2).
inline bool is_basis_graph(const Hypergraph& g, int min_black_valency = 3) {
    return is_valid(g, {min_black_valency});
}

// ---------------------------------------------------------------------------
// Degrees and weights.

inline int degree(const Hypergraph& g) {
    const int E = (int)g.edges.size();
    const int S = (int)g.hyperedges.size();
    const int B = g.n_black;
    const int d = g.flavor.d;
    switch (g.flavor.kind) {
    case Kind::GraEven:
    case Kind::GraOdd:
    case Kind::GC: return (1 - d) * E;
    case Kind::Hgra: return (1 - d) * S; // (1+2d) - 3d per hyperedge
    case Kind::BVHgra: return -E - 2 * S; // edges -1, stars +1, flags -1 each
    case Kind::FBVH:
    case Kind::Forest: return 3 * B - 2 * S - E;
    case Kind::Hgraphs: return d * B + (1 - d) * S;
    case Kind::FhGC: return d * B + (1 + 2 * d) * S - 3 * d * S - 2 * d;
    }
    return 0;
}

// The derived grading w = 2*V_black - 2*V_star - #E, preserved by the
// differential and additive under composition. Only meaningful for the
// BV-hypergraph flavors.
inline int weight(const Hypergraph& g) {
    if (g.flavor.kind != Kind::FBVH && g.flavor.kind != Kind::Forest &&
        g.flavor.kind != Kind::BVHgra)
        throw std::invalid_argument("weight: unsupported flavor");
    return 2 * g.n_black - 2 * (int)g.hyperedges.size() - (int)g.edges.size();
}

} // namespace hyperoperad
