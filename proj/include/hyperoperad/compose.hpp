#pragma once

#include <functional>

#include "formal_sum.hpp"

namespace hyperoperad {

// ---------------------------------------------------------------------------
// White-label bookkeeping for _i o_j compositions. The default splice keeps
// the labels of g1 below i in place, inserts the labels of g2 (minus j) in
// ascending order starting at position i, and shifts the remaining g1 labels
// up. Set-style compositions (derivations, axiom checks) pass custom maps.

struct LabelMaps {
    std::vector<int> map1, map2; // white label -> result label; erased slot = -1
    int result_arity = 0;
};

inline LabelMaps splice_maps(int n1, int i, int n2, int j) {
    LabelMaps lm;
    lm.result_arity = n1 + n2 - 2;
    lm.map1.assign(n1, -1);
    lm.map2.assign(n2, -1);
    for (int x = 0; x < n1; ++x)
        if (x != i) lm.map1[x] = x < i ? x : x + n2 - 2;
    for (int y = 0; y < n2; ++y)
        if (y != j) lm.map2[y] = y < j ? i + y : i + y - 1;
    return lm;
}

// Orientation of a fused hyperedge group relative to the two consumed edges.
// The group reads e ^ z(e) ^ new flag ^ star; the constant below pins the
// remaining convention freedom and is fixed by the Maurer-Cartan identity
// delta_black(D^) + D^ o_{1,0} D^ = 0.
inline constexpr int kFusionSign = -1;

namespace detail {

// Iterate over all choice vectors c with c[k] in [0, radix[k]).
inline void for_each_choice(const std::vector<int>& radix,
                            const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> c(radix.size(), 0);
    for (int r : radix)
        if (r == 0) return;
    while (true) {
        fn(c);
        size_t k = 0;
        while (k < c.size() && ++c[k] == radix[k]) c[k++] = 0;
        if (k == c.size() && !c.empty()) return;
        if (c.empty()) return;
    }
}

inline void for_each_subset(int n, const std::function<void(const std::vector<int>&)>& fn) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) s.push_back(k);
        fn(s);
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Gra_d composition (eq. of section 2.7): erase the two labelled vertices and
// reattach the dangling half-edges in all possible ways.

inline FormalSum compose_gra_core(const Hypergraph& g1, int i, const Hypergraph& g2, int j,
                                  const LabelMaps& lm) {
    FormalSum out;
    auto m1 = [&](V v) { return white(lm.map1[v.idx]); };
    auto m2 = [&](V v) { return white(lm.map2[v.idx]); };
    std::vector<Att> h1 = attachments_at(g1, white(i)), h2 = attachments_at(g2, white(j));
    std::vector<V> t2, t1; // reattachment targets, already in result labels
    for (int y = 0; y < g2.n_white; ++y)
        if (y != j) t2.push_back(white(lm.map2[y]));
    for (int x = 0; x < g1.n_white; ++x)
        if (x != i) t1.push_back(white(lm.map1[x]));

    std::vector<int> radix(h1.size(), (int)t2.size());
    radix.insert(radix.end(), h2.size(), (int)t1.size());
    detail::for_each_choice(radix, [&](const std::vector<int>& c) {
        Hypergraph r;
        r.flavor = g1.flavor;
        r.n_white = lm.result_arity;
        for (const Edge& e : g1.edges) r.edges.push_back({m1(e[0]), m1(e[1])});
        for (const Edge& e : g2.edges)
            r.edges.push_back({m2(e[0]), m2(e[1])});
        for (size_t k = 0; k < h1.size(); ++k)
            r.edges[h1[k].index][h1[k].slot] = t2[c[k]];
        for (size_t k = 0; k < h2.size(); ++k)
            r.edges[g1.edges.size() + h2[k].index][h2[k].slot] = t1[c[h1.size() + k]];
        // stored order equals or(g1) ^ or(g2)
        out.add_canonical(r, 1);
    });
    return out;
}

inline FormalSum compose_gra(const Hypergraph& g1, int i, const Hypergraph& g2, int j) {
    if (g1.flavor != g2.flavor) throw std::invalid_argument("compose_gra: flavor mismatch");
    if (g1.flavor.kind != Kind::GraEven && g1.flavor.kind != Kind::GraOdd)
        throw std::invalid_argument("compose_gra: not a Gra flavor");
    if (i < 0 || i >= g1.n_white || j < 0 || j >= g2.n_white)
        throw std::invalid_argument("compose_gra: label out of range");
    return compose_gra_core(g1, i, g2, j, splice_maps(g1.n_white, i, g2.n_white, j));
}

// ---------------------------------------------------------------------------
// Hgra_d composition: identical pattern with flags in place of half-edges.

inline FormalSum compose_hgra_core(const Hypergraph& g1, int i, const Hypergraph& g2, int j,
                                   const LabelMaps& lm) {
    FormalSum out;
    auto m1 = [&](V v) { return is_white(v) ? white(lm.map1[v.idx]) : v; };
    auto m2 = [&](V v) { return is_white(v) ? white(lm.map2[v.idx]) : v; };
    std::vector<Att> f1 = attachments_at(g1, white(i)), f2 = attachments_at(g2, white(j));
    std::vector<V> t2, t1;
    for (int y = 0; y < g2.n_white; ++y)
        if (y != j) t2.push_back(white(lm.map2[y]));
    for (int x = 0; x < g1.n_white; ++x)
        if (x != i) t1.push_back(white(lm.map1[x]));

    std::vector<int> radix(f1.size(), (int)t2.size());
    radix.insert(radix.end(), f2.size(), (int)t1.size());
    detail::for_each_choice(radix, [&](const std::vector<int>& c) {
        Hypergraph r;
        r.flavor = g1.flavor;
        r.n_white = lm.result_arity;
        for (const Hyperedge& he : g1.hyperedges)
            r.hyperedges.push_back({m1(he[0]), m1(he[1]), m1(he[2])});
        for (const Hyperedge& he : g2.hyperedges)
            r.hyperedges.push_back({m2(he[0]), m2(he[1]), m2(he[2])});
        for (size_t k = 0; k < f1.size(); ++k)
            r.hyperedges[f1[k].index][f1[k].slot] = t2[c[k]];
        for (size_t k = 0; k < f2.size(); ++k)
            r.hyperedges[g1.hyperedges.size() + f2[k].index][f2[k].slot] =
                t1[c[f1.size() + k]];
        out.add_canonical(r, 1);
    });
    return out;
}

inline FormalSum compose_hgra(const Hypergraph& g1, int i, const Hypergraph& g2, int j) {
    if (g1.flavor != g2.flavor || g1.flavor.kind != Kind::Hgra)
        throw std::invalid_argument("compose_hgra: flavor mismatch");
    if (i < 0 || i >= g1.n_white || j < 0 || j >= g2.n_white)
        throw std::invalid_argument("compose_hgra: label out of range");
    return compose_hgra_core(g1, i, g2, j, splice_maps(g1.n_white, i, g2.n_white, j));
}

// ---------------------------------------------------------------------------
// BVHgra / fBVHgraphs composition. Flags and edges attached to the erased
// white vertices reattach to the opponent's vertices; in addition any number
// of edge pairs (one from each side) fuse into new hyperedges whose third
// flag runs over all legitimate vertices. Terms that would create an edge
// between two black vertices or an all-black hyperedge belong to the operadic
// ideal and are dropped.

inline FormalSum compose_bvh_core(const Hypergraph& g1, int i, const Hypergraph& g2, int j,
                                  const LabelMaps& lm) {
    FormalSum out;
    const int b_off = g1.n_black;
    auto m1 = [&](V v) { return is_white(v) ? white(lm.map1[v.idx]) : v; };
    auto m2 = [&](V v) { return is_white(v) ? white(lm.map2[v.idx]) : black(v.idx + b_off); };

    std::vector<Att> f1a, e1a, f2a, e2a;
    for (Att a : attachments_at(g1, white(i)))
        (a.type == 1 ? f1a : e1a).push_back(a);
    for (Att a : attachments_at(g2, white(j)))
        (a.type == 1 ? f2a : e2a).push_back(a);

    std::vector<V> t2, t1; // all vertices of the opponent, result names
    for (int y = 0; y < g2.n_white; ++y)
        if (y != j) t2.push_back(white(lm.map2[y]));
    for (int b = 0; b < g2.n_black; ++b) t2.push_back(black(b + b_off));
    for (int x = 0; x < g1.n_white; ++x)
        if (x != i) t1.push_back(white(lm.map1[x]));
    for (int b = 0; b < g1.n_black; ++b) t1.push_back(black(b));

    // per-flag legitimate targets: the flag's hyperedge must keep >=1 white flag
    auto flag_targets = [&](const Hypergraph& g, Att a, const std::vector<V>& ts,
                            const auto& mself) {
        const Hyperedge& he = g.hyperedges[a.index];
        bool other_white = false;
        for (int s = 0; s < 3; ++s)
            if (s != a.slot && is_white(he[s])) other_white = true;
        std::vector<V> ok;
        for (V t : ts)
            if (other_white || is_white(t)) ok.push_back(t);
        (void)mself;
        return ok;
    };
    // per-edge legitimate targets: no black-black edges
    auto edge_targets = [&](const Hypergraph& g, Att a, const std::vector<V>& ts,
                            const auto& mself) {
        V far = mself(g.edges[a.index][1 - a.slot]);
        std::vector<V> ok;
        for (V t : ts)
            if (!(is_black(far) && is_black(t))) ok.push_back(t);
        return ok;
    };

    std::vector<std::vector<V>> ft1, ft2;
    for (Att a : f1a) ft1.push_back(flag_targets(g1, a, t2, m1));
    for (Att a : f2a) ft2.push_back(flag_targets(g2, a, t1, m2));

    detail::for_each_subset((int)e1a.size(), [&](const std::vector<int>& I2) {
        detail::for_each_subset((int)e2a.size(), [&](const std::vector<int>& J2) {
            if (I2.size() != J2.size()) return;
            std::vector<int> I1, J1; // reattached edges
            for (int k = 0; k < (int)e1a.size(); ++k)
                if (std::find(I2.begin(), I2.end(), k) == I2.end()) I1.push_back(k);
            for (int k = 0; k < (int)e2a.size(); ++k)
                if (std::find(J2.begin(), J2.end(), k) == J2.end()) J1.push_back(k);

            std::vector<std::vector<V>> st1, st2;
            for (int k : I1) st1.push_back(edge_targets(g1, e1a[k], t2, m1));
            for (int k : J1) st2.push_back(edge_targets(g2, e2a[k], t1, m2));

            std::vector<int> zperm(J2.size());
            std::iota(zperm.begin(), zperm.end(), 0);
            do {
                // fused pairs: (e1a[I2[p]], e2a[J2[zperm[p]]])
                std::vector<V> far1(I2.size()), far2(I2.size());
                std::vector<std::vector<V>> hang(I2.size());
                bool feasible = true;
                for (size_t p = 0; p < I2.size() && feasible; ++p) {
                    Att a1 = e1a[I2[p]], a2 = e2a[J2[zperm[p]]];
                    far1[p] = m1(g1.edges[a1.index][1 - a1.slot]);
                    far2[p] = m2(g2.edges[a2.index][1 - a2.slot]);
                    bool some_white = is_white(far1[p]) || is_white(far2[p]);
                    for (V t : t1)
                        if (t != far1[p] && t != far2[p] && (some_white || is_white(t)))
                            hang[p].push_back(t);
                    for (V t : t2)
                        if (t != far1[p] && t != far2[p] && (some_white || is_white(t)))
                            hang[p].push_back(t);
                    if (hang[p].empty()) feasible = false;
                }
                if (!feasible) continue;

                std::vector<int> radix;
                for (auto& v : ft1) radix.push_back((int)v.size());
                for (auto& v : ft2) radix.push_back((int)v.size());
                for (auto& v : st1) radix.push_back((int)v.size());
                for (auto& v : st2) radix.push_back((int)v.size());
                for (auto& v : hang) radix.push_back((int)v.size());

                detail::for_each_choice(radix, [&](const std::vector<int>& c) {
                    Hypergraph r;
                    r.flavor = g1.flavor.kind == Kind::BVHgra && g2.flavor.kind == Kind::BVHgra
                                   ? g1.flavor
                                   : Flavor{Kind::FBVH, 0};
                    if (g1.flavor.kind == Kind::Forest) r.flavor = g1.flavor;
                    r.n_white = lm.result_arity;
                    r.n_black = g1.n_black + g2.n_black;

                    std::vector<Atom> word;
                    // surviving edges of g1, then of g2 (conceptual positions of
                    // fused edges become the first two flags of the new stars)
                    std::vector<int> fused_of_e1((int)g1.edges.size(), -1),
                        fused_of_e2((int)g2.edges.size(), -1);
                    for (size_t p = 0; p < I2.size(); ++p) {
                        fused_of_e1[e1a[I2[p]].index] = (int)p;
                        fused_of_e2[e2a[J2[zperm[p]]].index] = (int)p;
                    }
                    int n_new_h = (int)g1.hyperedges.size() + (int)g2.hyperedges.size();
                    size_t ci = 0;
                    auto emit_edges = [&](const Hypergraph& g, const std::vector<int>& fused_of,
                                          const auto& m) {
                        for (int e = 0; e < (int)g.edges.size(); ++e) {
                            if (fused_of[e] >= 0) {
                                word.push_back(
                                    flag_atom(n_new_h + fused_of[e], &g == &g1 ? 0 : 1));
                                continue;
                            }
                            word.push_back(edge_atom((int)r.edges.size()));
                            r.edges.push_back({m(g.edges[e][0]), m(g.edges[e][1])});
                        }
                    };
                    // g1 block
                    emit_edges(g1, fused_of_e1, m1);
                    for (int h = 0; h < (int)g1.hyperedges.size(); ++h) {
                        for (int s = 0; s < 3; ++s) word.push_back(flag_atom(h, s));
                        const Hyperedge& he = g1.hyperedges[h];
                        r.hyperedges.push_back({m1(he[0]), m1(he[1]), m1(he[2])});
                    }
                    for (int h = 0; h < (int)g1.hyperedges.size(); ++h)
                        word.push_back(star_atom(h));
                    for (int b = 0; b < g1.n_black; ++b) word.push_back(black_atom(b));
                    // g2 block
                    emit_edges(g2, fused_of_e2, m2);
                    int h2_off = (int)g1.hyperedges.size();
                    for (int h = 0; h < (int)g2.hyperedges.size(); ++h) {
                        for (int s = 0; s < 3; ++s) word.push_back(flag_atom(h2_off + h, s));
                        const Hyperedge& he = g2.hyperedges[h];
                        r.hyperedges.push_back({m2(he[0]), m2(he[1]), m2(he[2])});
                    }
                    for (int h = 0; h < (int)g2.hyperedges.size(); ++h)
                        word.push_back(star_atom(h2_off + h));
                    for (int b = 0; b < g2.n_black; ++b) word.push_back(black_atom(b_off + b));

                    // apply the reattachment choices
                    for (size_t k = 0; k < f1a.size(); ++k)
                        r.hyperedges[f1a[k].index][f1a[k].slot] = ft1[k][c[ci + k]];
                    ci += f1a.size();
                    for (size_t k = 0; k < f2a.size(); ++k)
                        r.hyperedges[h2_off + f2a[k].index][f2a[k].slot] = ft2[k][c[ci + k]];
                    ci += f2a.size();
                    // surviving-edge index translation: rebuild endpoint moves
                    {
                        // indices of surviving g1 edges in r, in order
                        std::vector<int> r_idx1, r_idx2;
                        int idx = 0;
                        for (int e = 0; e < (int)g1.edges.size(); ++e)
                            if (fused_of_e1[e] < 0) r_idx1.push_back(idx++);
                        int off2 = idx;
                        (void)off2;
                        for (int e = 0; e < (int)g2.edges.size(); ++e)
                            if (fused_of_e2[e] < 0) r_idx2.push_back(idx++);
                        // map original edge index -> r index
                        std::vector<int> pos1((int)g1.edges.size(), -1),
                            pos2((int)g2.edges.size(), -1);
                        int q = 0;
                        for (int e = 0; e < (int)g1.edges.size(); ++e)
                            if (fused_of_e1[e] < 0) pos1[e] = r_idx1[q++];
                        q = 0;
                        for (int e = 0; e < (int)g2.edges.size(); ++e)
                            if (fused_of_e2[e] < 0) pos2[e] = r_idx2[q++];
                        for (size_t k = 0; k < I1.size(); ++k) {
                            Att a = e1a[I1[k]];
                            r.edges[pos1[a.index]][a.slot] = st1[k][c[ci + k]];
                        }
                        ci += I1.size();
                        for (size_t k = 0; k < J1.size(); ++k) {
                            Att a = e2a[J1[k]];
                            r.edges[pos2[a.index]][a.slot] = st2[k][c[ci + k]];
                        }
                        ci += J1.size();
                    }
                    // fused hyperedges, in pair order: flags far1 ^ far2 ^ hang,
                    // conceptual tail: new flag ^ star per pair
                    for (size_t p = 0; p < I2.size(); ++p) {
                        r.hyperedges.push_back({far1[p], far2[p], hang[p][c[ci + p]]});
                        word.push_back(flag_atom(n_new_h + (int)p, 2));
                        word.push_back(star_atom(n_new_h + (int)p));
                    }
                    ci += I2.size();

                    if (r.flavor.kind == Kind::Forest && !is_valid(r)) return; // genus ideal
                    int fsign = I2.size() % 2 != 0 ? kFusionSign : 1;
                    out.add_canonical(r, Rational(fsign) * word_sign(r, word));
                });
            } while (std::next_permutation(zperm.begin(), zperm.end()));
        });
    });
    return out;
}

inline FormalSum compose_bvh(const Hypergraph& g1, int i, const Hypergraph& g2, int j) {
    if (g1.flavor != g2.flavor) throw std::invalid_argument("compose_bvh: flavor mismatch");
    Kind k = g1.flavor.kind;
    if (k != Kind::BVHgra && k != Kind::FBVH && k != Kind::Forest)
        throw std::invalid_argument("compose_bvh: not a BV hypergraph flavor");
    if (i < 0 || i >= g1.n_white || j < 0 || j >= g2.n_white)
        throw std::invalid_argument("compose_bvh: label out of range");
    if (!is_valid(g1) || !is_valid(g2)) throw std::invalid_argument("compose_bvh: inadmissible input");
    return compose_bvh_core(g1, i, g2, j, splice_maps(g1.n_white, i, g2.n_white, j));
}

// Dispatch on flavor.
inline FormalSum compose(const Hypergraph& g1, int i, const Hypergraph& g2, int j) {
    switch (g1.flavor.kind) {
    case Kind::GraEven:
    case Kind::GraOdd: return compose_gra(g1, i, g2, j);
    case Kind::Hgra: return compose_hgra(g1, i, g2, j);
    case Kind::BVHgra:
    case Kind::FBVH:
    case Kind::Forest: return compose_bvh(g1, i, g2, j);
    default: throw std::invalid_argument("compose: flavor has no white-label composition");
    }
}

inline FormalSum compose_core_any(const Hypergraph& g1, int i, const Hypergraph& g2, int j,
                                  const LabelMaps& lm) {
    switch (g1.flavor.kind) {
    case Kind::GraEven:
    case Kind::GraOdd: return compose_gra_core(g1, i, g2, j, lm);
    case Kind::Hgra: return compose_hgra_core(g1, i, g2, j, lm);
    case Kind::BVHgra:
    case Kind::FBVH:
    case Kind::Forest: return compose_bvh_core(g1, i, g2, j, lm);
    default: throw std::invalid_argument("compose: flavor has no white-label composition");
    }
}

// Linear extensions.
inline FormalSum compose(const FormalSum& a, int i, const FormalSum& b, int j) {
    FormalSum out;
    for (const auto& [ka, ta] : a.terms())
        for (const auto& [kb, tb] : b.terms()) {
            FormalSum part = compose(ta.graph, i, tb.graph, j);
            part *= ta.coeff * tb.coeff;
            out += part;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Derivation attached to a skew-symmetric arity-((2)) element:
//   D(a) = sum_{i=0..n} D _1o_i a,  with D's remaining white 0 taking label i.

inline bool is_skew_arity2(const FormalSum& D) {
    FormalSum flipped;
    for (const auto& [k, t] : D.terms()) {
        if (t.graph.n_white != 2) return false;
        SignedGraph sg = act_permutation(t.graph, {1, 0});
        flipped.add(sg, t.coeff);
    }
    FormalSum sum = flipped;
    sum += D;
    return sum.is_zero();
}

inline FormalSum derivation_from_skew(const FormalSum& D, const Hypergraph& g) {
    if (!is_skew_arity2(D)) throw std::invalid_argument("derivation_from_skew: D not skew");
    FormalSum out;
    for (int i = 0; i < g.n_white; ++i) {
        LabelMaps lm;
        lm.result_arity = g.n_white;
        lm.map1 = {i, -1}; // D's white 0 takes the label i
        lm.map2.resize(g.n_white);
        std::iota(lm.map2.begin(), lm.map2.end(), 0);
        lm.map2[i] = -1;
        for (const auto& [k, t] : D.terms()) {
            FormalSum part = compose_core_any(t.graph, 1, g, i, lm);
            part *= t.coeff;
            out += part;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Operad axioms, checked as FormalSum identities with provenance-aligned
// labels. Returns true when the two iterated compositions agree.

inline bool axiom_check_associativity(const Hypergraph& a, int i, const Hypergraph& b, int j1,
                                      int j2, const Hypergraph& c, int k) {
    // final labels: a's whites (minus i) first, then b's (minus j1,j2), then c's (minus k)
    int na = a.n_white, nb = b.n_white, nc = c.n_white;
    std::vector<int> fa(na, -1), fb(nb, -1), fc(nc, -1);
    int next = 0;
    for (int x = 0; x < na; ++x)
        if (x != i) fa[x] = next++;
    for (int y = 0; y < nb; ++y)
        if (y != j1 && y != j2) fb[y] = next++;
    for (int z = 0; z < nc; ++z)
        if (z != k) fc[z] = next++;
    int N = next;

    // LHS: X = a o b at (i, j1) on labels: a-part final, b-part temporary tail
    LabelMaps l1;
    l1.result_arity = N + 1; // b's j2 gets the extra temporary label N
    l1.map1 = fa;
    l1.map2.assign(nb, -1);
    for (int y = 0; y < nb; ++y)
        if (y != j1) l1.map2[y] = y == j2 ? N : fb[y];
    FormalSum X = compose_core_any(a, i, b, j1, l1);
    FormalSum lhs;
    for (const auto& [kx, tx] : X.terms()) {
        LabelMaps l2;
        l2.result_arity = N;
        l2.map1.assign(N + 1, -1);
        for (int x = 0; x < N; ++x) l2.map1[x] = x;
        l2.map2.assign(nc, -1);
        for (int z = 0; z < nc; ++z)
            if (z != k) l2.map2[z] = fc[z];
        FormalSum part = compose_core_any(tx.graph, N, c, k, l2);
        part *= tx.coeff;
        lhs += part;
    }

    // RHS: Y = b o c at (j2, k) with b's j1 kept as temporary label N
    LabelMaps r1;
    r1.result_arity = N + 1;
    r1.map1.assign(nb, -1);
    for (int y = 0; y < nb; ++y)
        if (y != j2) r1.map1[y] = y == j1 ? N : fb[y];
    r1.map2 = fc;
    FormalSum Y = compose_core_any(b, j2, c, k, r1);
    FormalSum rhs;
    for (const auto& [ky, ty] : Y.terms()) {
        LabelMaps r2;
        r2.result_arity = N;
        r2.map1 = fa;
        r2.map2.assign(N + 1, -1);
        for (int x = 0; x < N; ++x) r2.map2[x] = x;
        FormalSum part = compose_core_any(a, i, ty.graph, N, r2);
        part *= ty.coeff;
        rhs += part;
    }
    return lhs == rhs;
}

inline bool axiom_check_commutativity(const Hypergraph& a, int i, const Hypergraph& b, int j) {
    int na = a.n_white, nb = b.n_white;
    std::vector<int> fa(na, -1), fb(nb, -1);
    int next = 0;
    for (int x = 0; x < na; ++x)
        if (x != i) fa[x] = next++;
    for (int y = 0; y < nb; ++y)
        if (y != j) fb[y] = next++;
    LabelMaps ab{fa, fb, next}, ba{fb, fa, next};
    FormalSum lhs = compose_core_any(a, i, b, j, ab);
    FormalSum rhs = compose_core_any(b, j, a, i, ba);
    int sgn = (degree(a) % 2 != 0 && degree(b) % 2 != 0) ? -1 : 1;
    rhs *= Rational(sgn);
    return lhs == rhs;
}

} // namespace hyperoperad
