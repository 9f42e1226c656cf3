#pragma once

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hypergraph.hpp"
#include "serialize.hpp"

namespace hyperoperad {

// ---------------------------------------------------------------------------
// Orientation atoms. The stored orientation word of a hypergraph is
//   e_0 ^ ... ^ e_{E-1} ^ f_{0,0} ^ f_{0,1} ^ f_{0,2} ^ ... ^ s_0 ^ ... ^ b_0 ^ ...
// (edges, then flags grouped per hyperedge, then stars, then black vertices).
// Only odd-degree atoms contribute Koszul signs.

struct Atom {
    int block; // 0 edge, 1 flag, 2 star, 3 black
    int id;    // edge index / 3h+s / hyperedge index / black index
    auto operator<=>(const Atom&) const = default;
};

inline Atom edge_atom(int e) { return {0, e}; }
inline Atom flag_atom(int h, int s) { return {1, 3 * h + s}; }
inline Atom star_atom(int h) { return {2, h}; }
inline Atom black_atom(int j) { return {3, j}; }

inline int stored_rank(const Hypergraph& g, Atom a) {
    int ne = (int)g.edges.size(), nh = (int)g.hyperedges.size();
    switch (a.block) {
    case 0: return a.id;
    case 1: return ne + a.id;
    case 2: return ne + 3 * nh + a.id;
    default: return ne + 3 * nh + nh + a.id;
    }
}

inline bool atom_odd(const Flavor& f, Atom a) {
    switch (a.block) {
    case 0: return f.edges_odd();
    case 1: return f.flags_odd();
    case 2: return f.stars_odd();
    default: return f.blacks_odd();
    }
}

inline int inversion_sign(const std::vector<int>& v) {
    int s = 1;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) s = -s;
    return s;
}

// Sign of rearranging the given conceptual orientation word into the stored
// word of g. `word` must enumerate each atom of g exactly once.
inline int word_sign(const Hypergraph& g, const std::vector<Atom>& word) {
    std::vector<int> odd_ranks;
    odd_ranks.reserve(word.size());
    for (Atom a : word)
        if (atom_odd(g.flavor, a)) odd_ranks.push_back(stored_rank(g, a));
    return inversion_sign(odd_ranks);
}

// ---------------------------------------------------------------------------
// Canonical forms.

struct SignedGraph {
    bool zero = false;
    int sign = 1;        // input equals sign * canonical representative
    Hypergraph graph;    // canonical representative (orientation sign +1)
    std::string key;     // bit-exact serialization of the representative

    static SignedGraph make_zero(const Flavor& fl, int arity) {
        SignedGraph z;
        z.zero = true;
        z.sign = 0;
        z.graph.flavor = fl;
        z.graph.n_white = arity;
        return z;
    }
};

namespace detail {

inline Hypergraph relabel_blacks(const Hypergraph& g, const std::vector<int>& perm) {
    Hypergraph h = g;
    auto map = [&](V v) { return is_black(v) ? black(perm[v.idx]) : v; };
    for (auto& e : h.edges) {
        e[0] = map(e[0]);
        e[1] = map(e[1]);
    }
    for (auto& he : h.hyperedges)
        for (auto& v : he) v = map(v);
    return h;
}

template <class T> inline int count_inversion_sign(const std::vector<T>& v) {
    int s = 1;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[j] < v[i]) s = -s;
    return s;
}

// Relabeling-invariant signature of a black vertex: sorted codes of its
// edge neighbours (white label or "some black") and, per incident hyperedge,
// the sorted codes of the other two endpoints.
inline std::vector<long> black_signature(const Hypergraph& g, int j) {
    std::vector<long> sig;
    V me = black(j);
    for (const Edge& e : g.edges) {
        if (e[0] == me) sig.push_back(is_white(e[1]) ? 100 + e[1].idx : 50);
        if (e[1] == me) sig.push_back(is_white(e[0]) ? 100 + e[0].idx : 50);
    }
    std::sort(sig.begin(), sig.end());
    std::vector<long> fsig;
    for (const Hyperedge& he : g.hyperedges) {
        int mine = 0;
        for (V v : he)
            if (v == me) ++mine;
        if (!mine) continue;
        std::vector<long> codes;
        for (V v : he)
            if (v != me) codes.push_back(is_white(v) ? 100 + v.idx : 50);
        std::sort(codes.begin(), codes.end());
        long code = 1000;
        for (long c : codes) code = code * 200 + c;
        fsig.push_back(code);
    }
    std::sort(fsig.begin(), fsig.end());
    sig.push_back(-1);
    sig.insert(sig.end(), fsig.begin(), fsig.end());
    return sig;
}

// All relabelings that send the k-th signature class (classes ordered by
// signature) onto the k-th block of consecutive indices. Restricting the
// minimization to these relabelings is sound: the candidate set depends only
// on the isomorphism class, and every automorphism preserves signatures.
inline void signature_perms(const std::vector<std::vector<int>>& groups, int n,
                            std::vector<std::vector<int>>& out) {
    std::vector<int> perm(n, -1);
    std::vector<int> start(groups.size(), 0);
    for (size_t k = 1; k < groups.size(); ++k)
        start[k] = start[k - 1] + (int)groups[k - 1].size();
    struct Rec {
        const std::vector<std::vector<int>>& groups;
        const std::vector<int>& start;
        std::vector<int>& perm;
        std::vector<std::vector<int>>& out;
        void go(size_t gi) {
            if (gi == groups.size()) {
                out.push_back(perm);
                return;
            }
            std::vector<int> members = groups[gi];
            std::sort(members.begin(), members.end());
            do {
                for (size_t t = 0; t < members.size(); ++t)
                    perm[members[t]] = start[gi] + (int)t;
                go(gi + 1);
            } while (std::next_permutation(members.begin(), members.end()));
        }
    } rec{groups, start, perm, out};
    rec.go(0);
    if (out.empty()) out.push_back(perm); // n == 0
}

} // namespace detail

// Canonicalize: minimize the serialization over black relabelings while
// tracking the Koszul sign of every reordering; detect graphs that admit an
// orientation-reversing automorphism (those are zero).
inline SignedGraph canonicalize(const Hypergraph& g, int presign = 1) {
    const Flavor& f = g.flavor;
    if (g.n_black > 9) throw std::invalid_argument("canonicalize: too many black vertices");

    // signature classes of black vertices
    std::map<std::vector<long>, std::vector<int>> classes;
    for (int j = 0; j < g.n_black; ++j) classes[detail::black_signature(g, j)].push_back(j);
    std::vector<std::vector<int>> groups;
    for (auto& [sig, js] : classes) groups.push_back(js);
    std::vector<std::vector<int>> perms;
    detail::signature_perms(groups, g.n_black, perms);

    bool have_best = false;
    Hypergraph best;
    int best_sign = 0;
    std::string best_key;

    for (const auto& perm : perms) {
        Hypergraph h = detail::relabel_blacks(g, perm);
        int sign = presign;
        if (f.blacks_odd()) {
            std::vector<int> p(perm.begin(), perm.end());
            sign *= inversion_sign(p);
        }
        // normalize edge endpoint order
        for (auto& e : h.edges) {
            if (e[1] < e[0]) {
                std::swap(e[0], e[1]);
                if (f.edges_directed()) sign = -sign;
            }
        }
        // sort edges
        if (f.edges_odd()) sign *= detail::count_inversion_sign(h.edges);
        std::stable_sort(h.edges.begin(), h.edges.end());
        if (f.edges_odd())
            for (size_t e = 1; e < h.edges.size(); ++e)
                if (h.edges[e] == h.edges[e - 1]) return SignedGraph::make_zero(f, g.n_white);
        // sort flags within each hyperedge
        for (auto& he : h.hyperedges) {
            std::vector<V> fl(he.begin(), he.end());
            if (f.flags_odd()) sign *= detail::count_inversion_sign(fl);
            std::sort(fl.begin(), fl.end());
            std::copy(fl.begin(), fl.end(), he.begin());
        }
        // sort hyperedges; swapping two hyperedges moves the stars and the
        // 3-flag blocks simultaneously
        int block_swap_sign = (f.stars_odd() ? -1 : 1) * (f.flags_odd() ? -1 : 1);
        if (block_swap_sign == -1) sign *= detail::count_inversion_sign(h.hyperedges);
        std::stable_sort(h.hyperedges.begin(), h.hyperedges.end());
        if (block_swap_sign == -1)
            for (size_t i = 1; i < h.hyperedges.size(); ++i)
                if (h.hyperedges[i] == h.hyperedges[i - 1])
                    return SignedGraph::make_zero(f, g.n_white);

        std::string key = serialize(h);
        if (!have_best || key < best_key) {
            have_best = true;
            best = h;
            best_sign = sign;
            best_key = key;
        } else if (key == best_key && sign != best_sign) {
            return SignedGraph::make_zero(f, g.n_white); // orientation-reversing automorphism
        }
    }
    SignedGraph out;
    out.zero = false;
    out.sign = best_sign;
    out.graph = best;
    out.key = best_key;
    return out;
}

// Relabel the white vertices by the permutation sigma (label i -> sigma[i])
// and re-canonicalize. Relabeling itself carries no sign.
inline SignedGraph act_permutation(const Hypergraph& g, const std::vector<int>& sigma) {
    if ((int)sigma.size() != g.n_white)
        throw std::invalid_argument("act_permutation: permutation size != arity");
    std::vector<bool> seen(g.n_white, false);
    for (int v : sigma) {
        if (v < 0 || v >= g.n_white || seen[v])
            throw std::invalid_argument("act_permutation: not a bijection");
        seen[v] = true;
    }
    Hypergraph h = g;
    auto map = [&](V v) { return is_white(v) ? white(sigma[v.idx]) : v; };
    for (auto& e : h.edges) {
        e[0] = map(e[0]);
        e[1] = map(e[1]);
    }
    for (auto& he : h.hyperedges)
        for (auto& v : he) v = map(v);
    return canonicalize(h);
}

} // namespace hyperoperad
