#pragma once

#include "generators.hpp"

namespace hyperoperad {

// Relative sign of the hyperedge summand of D^ against the two-edge path
// summand, under this library's orientation conventions. Pinned by the
// Maurer-Cartan identity delta_black(D^) + D^ o_{1,0} D^ = 0.
inline constexpr int kDhatStarSign = 1;
// Sign of the twisting element D of Hgraphs_d (Maurer-Cartan identity of
// section 3.5).
inline constexpr int kTwistSign = 1;

namespace detail {

// (-1)^{number of odd atoms strictly before a in g's stored word}; the sign
// of moving the atom to the front before stripping it.
inline int strip_front_sign(const Hypergraph& g, Atom a) {
    if (!atom_odd(g.flavor, a)) return 1;
    int r = stored_rank(g, a);
    int cnt = 0;
    const Flavor& f = g.flavor;
    int ne = (int)g.edges.size(), nh = (int)g.hyperedges.size();
    auto add_block = [&](bool odd, int block_start, int block_size) {
        if (!odd) return;
        int lo = std::min(std::max(r - block_start, 0), block_size);
        cnt += lo;
    };
    add_block(f.edges_odd(), 0, ne);
    add_block(f.flags_odd(), ne, 3 * nh);
    add_block(f.stars_odd(), ne + 3 * nh, nh);
    add_block(f.blacks_odd(), ne + 4 * nh, g.n_black);
    return cnt % 2 == 0 ? 1 : -1;
}

inline int black_remap(int idx, int removed) { return idx < removed ? idx : idx - 1; }

struct SplitMove {
    Att att;
    bool movable;
};

// Attachments of white vertex i that may be redistributed onto a new black
// vertex: an edge may move unless its far end is black (no black-black
// edges); a flag may move unless its hyperedge would lose its last white flag.
inline std::vector<SplitMove> white_moveset(const Hypergraph& g, int i, int skip_edge = -1) {
    std::vector<SplitMove> out;
    for (Att a : attachments_at(g, white(i))) {
        if (a.type == 0 && a.index == skip_edge) continue;
        bool mv;
        if (a.type == 0) {
            mv = !is_black(g.edges[a.index][1 - a.slot]);
        } else {
            const Hyperedge& he = g.hyperedges[a.index];
            mv = false;
            for (int s = 0; s < 3; ++s)
                if (s != a.slot && is_white(he[s])) mv = true;
        }
        out.push_back({a, mv});
    }
    return out;
}

// Append the word of g (edges, flags, stars, blacks) skipping the given
// black vertex and with hyperedge/flag atoms emitted through `emit`.
inline void append_graph_word(const Hypergraph& g, std::vector<Atom>& word, int skip_black = -1,
                              int skip_hyper = -1, int skip_edge = -1,
                              int edge_atom_offset = 0, int hyper_atom_offset = 0,
                              int black_atom_offset = 0) {
    int e_out = edge_atom_offset;
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        if (e == skip_edge) continue;
        word.push_back(edge_atom(e_out++));
    }
    int h_out = hyper_atom_offset;
    std::vector<int> h_new;
    for (int h = 0; h < (int)g.hyperedges.size(); ++h) {
        if (h == skip_hyper) {
            h_new.push_back(-1);
            continue;
        }
        h_new.push_back(h_out++);
        for (int s = 0; s < 3; ++s) word.push_back(flag_atom(h_new[h], s));
    }
    for (int h = 0; h < (int)g.hyperedges.size(); ++h)
        if (h != skip_hyper) word.push_back(star_atom(h_new[h]));
    int b_out = black_atom_offset;
    for (int b = 0; b < g.n_black; ++b) {
        if (b == skip_black) continue;
        word.push_back(black_atom(b_out++));
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// delta_black: splits one black vertex into two joined by a new hyperedge
// whose third flag runs over the legitimate targets. Ordered splittings with
// the 1/2 prefactor of the paper; mirror pairs merge to integral
// coefficients under canonicalization.

inline FormalSum delta_black(const Hypergraph& g) {
    FormalSum out;
    const Flavor f = g.flavor;
    const bool allblack_ok = f.kind == Kind::FhGC;
    for (int v = 0; v < g.n_black; ++v) {
        int presign = detail::strip_front_sign(g, black_atom(v));
        std::vector<Att> atts = attachments_at(g, black(v));
        std::vector<V> targets;
        if (allblack_ok) {
            for (int b = 0; b < g.n_black; ++b)
                if (b != v) targets.push_back(black(b));
        } else {
            for (int w = 0; w < g.n_white; ++w) targets.push_back(white(w));
        }
        const int v1 = g.n_black - 1, v2 = g.n_black;
        for (unsigned mask = 0; mask < (1u << atts.size()); ++mask) {
            for (V t : targets) {
                Hypergraph r;
                r.flavor = f;
                r.n_white = g.n_white;
                r.n_black = g.n_black + 1;
                auto remap = [&](V x) {
                    return is_black(x) ? black(detail::black_remap(x.idx, v)) : x;
                };
                for (const Edge& e : g.edges) r.edges.push_back({remap(e[0]), remap(e[1])});
                for (const Hyperedge& he : g.hyperedges)
                    r.hyperedges.push_back({remap(he[0]), remap(he[1]), remap(he[2])});
                for (size_t k = 0; k < atts.size(); ++k) {
                    V dst = (mask >> k) & 1 ? black(v2) : black(v1);
                    if (atts[k].type == 0)
                        r.edges[atts[k].index][atts[k].slot] = dst;
                    else
                        r.hyperedges[atts[k].index][atts[k].slot] = dst;
                }
                int NH = (int)g.hyperedges.size();
                r.hyperedges.push_back({remap(t), black(v1), black(v2)});
                std::vector<Atom> word = {flag_atom(NH, 0), flag_atom(NH, 1), flag_atom(NH, 2),
                                          star_atom(NH),   black_atom(v1),   black_atom(v2)};
                detail::append_graph_word(g, word, v);
                out.add_canonical(r, Rational(1, 2) * presign * word_sign(r, word));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The three white-vertex parts of the full differential of fBVHgraphs (the
// derivation attached to D^), implemented directly from the pictorial rules.
// delta_white_star is also the twisted part of the Hgraphs_d differential.

inline FormalSum delta_white_star(const Hypergraph& g, int i) {
    FormalSum out;
    auto moves = detail::white_moveset(g, i);
    std::vector<V> hang;
    for (int w = 0; w < g.n_white; ++w)
        if (w != i) hang.push_back(white(w));
    for (int b = 0; b < g.n_black; ++b) hang.push_back(black(b));
    const int bnew = g.n_black;
    for (unsigned mask = 0; mask < (1u << moves.size()); ++mask) {
        bool ok = true;
        for (size_t k = 0; k < moves.size(); ++k)
            if (((mask >> k) & 1) && !moves[k].movable) ok = false;
        if (!ok) continue;
        for (V t : hang) {
            Hypergraph r;
            r.flavor = g.flavor;
            r.n_white = g.n_white;
            r.n_black = g.n_black + 1;
            r.edges = g.edges;
            r.hyperedges = g.hyperedges;
            for (size_t k = 0; k < moves.size(); ++k) {
                if (!((mask >> k) & 1)) continue;
                Att a = moves[k].att;
                if (a.type == 0)
                    r.edges[a.index][a.slot] = black(bnew);
                else
                    r.hyperedges[a.index][a.slot] = black(bnew);
            }
            int NH = (int)g.hyperedges.size();
            r.hyperedges.push_back({white(i), t, black(bnew)});
            std::vector<Atom> word = {flag_atom(NH, 0), flag_atom(NH, 1), flag_atom(NH, 2),
                                      star_atom(NH), black_atom(bnew)};
            detail::append_graph_word(g, word);
            out.add_canonical(r, Rational(kDhatStarSign) * word_sign(r, word));
        }
    }
    return out;
}

inline FormalSum delta_white_two(const Hypergraph& g, int i) {
    FormalSum out;
    auto moves = detail::white_moveset(g, i);
    const int bnew = g.n_black;
    for (unsigned mask = 0; mask < (1u << moves.size()); ++mask) {
        bool ok = true;
        for (size_t k = 0; k < moves.size(); ++k)
            if (((mask >> k) & 1) && !moves[k].movable) ok = false;
        if (!ok) continue;
        for (int t = 0; t < g.n_white; ++t) {
            if (t == i) continue; // hanging solid edge reattaches elsewhere
            Hypergraph r;
            r.flavor = g.flavor;
            r.n_white = g.n_white;
            r.n_black = g.n_black + 1;
            r.edges = g.edges;
            r.hyperedges = g.hyperedges;
            for (size_t k = 0; k < moves.size(); ++k) {
                if (!((mask >> k) & 1)) continue;
                Att a = moves[k].att;
                if (a.type == 0)
                    r.edges[a.index][a.slot] = black(bnew);
                else
                    r.hyperedges[a.index][a.slot] = black(bnew);
            }
            int e1 = (int)r.edges.size();
            r.edges.push_back({white(i), black(bnew)});
            r.edges.push_back({white(t), black(bnew)});
            std::vector<Atom> word = {edge_atom(e1), edge_atom(e1 + 1), black_atom(bnew)};
            detail::append_graph_word(g, word);
            out.add_canonical(r, Rational(1) * word_sign(r, word));
        }
    }
    return out;
}

inline FormalSum delta_white_one(const Hypergraph& g, int i) {
    FormalSum out;
    const int bnew = g.n_black;
    for (Att ea : attachments_at(g, white(i))) {
        if (ea.type != 0) continue;
        const int e = ea.index;
        V far = g.edges[e][1 - ea.slot];
        auto moves = detail::white_moveset(g, i, e);
        // hang targets: any vertex except the new black and far(e); the new
        // hyperedge must keep a white flag ("the vertex i including")
        std::vector<V> hang;
        for (int w = 0; w < g.n_white; ++w)
            if (white(w) != far) hang.push_back(white(w));
        if (is_white(far))
            for (int b = 0; b < g.n_black; ++b) hang.push_back(black(b));
        for (unsigned mask = 0; mask < (1u << moves.size()); ++mask) {
            bool ok = true;
            for (size_t k = 0; k < moves.size(); ++k)
                if (((mask >> k) & 1) && !moves[k].movable) ok = false;
            if (!ok) continue;
            for (V t : hang) {
                Hypergraph r;
                r.flavor = g.flavor;
                r.n_white = g.n_white;
                r.n_black = g.n_black + 1;
                r.hyperedges = g.hyperedges;
                r.edges.clear();
                std::vector<int> epos(g.edges.size(), -1);
                for (int e2 = 0; e2 < (int)g.edges.size(); ++e2) {
                    if (e2 == e) continue;
                    epos[e2] = (int)r.edges.size();
                    r.edges.push_back(g.edges[e2]);
                }
                for (size_t k = 0; k < moves.size(); ++k) {
                    if (!((mask >> k) & 1)) continue;
                    Att a = moves[k].att;
                    if (a.type == 0)
                        r.edges[epos[a.index]][a.slot] = black(bnew);
                    else
                        r.hyperedges[a.index][a.slot] = black(bnew);
                }
                int e_new = (int)r.edges.size();
                r.edges.push_back({white(i), black(bnew)});
                int NH = (int)g.hyperedges.size();
                r.hyperedges.push_back({black(bnew), far, t});

                std::vector<Atom> word = {edge_atom(e_new), flag_atom(NH, 0),
                                          black_atom(bnew)};
                // remainder: g's word with the fused edge slot taken by the
                // second flag of the new hyperedge
                for (int e2 = 0; e2 < (int)g.edges.size(); ++e2)
                    word.push_back(e2 == e ? flag_atom(NH, 1) : edge_atom(epos[e2]));
                for (int h = 0; h < (int)g.hyperedges.size(); ++h)
                    for (int s = 0; s < 3; ++s) word.push_back(flag_atom(h, s));
                for (int h = 0; h < (int)g.hyperedges.size(); ++h)
                    word.push_back(star_atom(h));
                for (int b = 0; b < g.n_black; ++b) word.push_back(black_atom(b));
                word.push_back(flag_atom(NH, 2));
                word.push_back(star_atom(NH));
                out.add_canonical(r, Rational(kFusionSign) * word_sign(r, word));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Full differentials.

enum class DeltaPart { Black, Star, TwoEdge, OneEdge };

namespace detail {
inline FormalSum project_forest(const FormalSum& s) {
    FormalSum out;
    for (const auto& [k, t] : s.terms()) {
        InternalStructure is = internal_structure(t.graph);
        bool forest = true;
        for (int c = 0; c < is.n_components; ++c)
            if (is.genus[c] > 0) forest = false;
        if (forest) {
            SignedGraph sg;
            sg.zero = false;
            sg.sign = 1;
            sg.graph = t.graph;
            sg.key = k;
            out.add(sg, t.coeff);
        }
    }
    return out;
}
} // namespace detail

inline FormalSum delta_fbvh_part(const Hypergraph& g, DeltaPart p) {
    FormalSum out;
    switch (p) {
    case DeltaPart::Black: out = delta_black(g); break;
    case DeltaPart::Star:
        for (int i = 0; i < g.n_white; ++i) out += delta_white_star(g, i);
        break;
    case DeltaPart::TwoEdge:
        for (int i = 0; i < g.n_white; ++i) out += delta_white_two(g, i);
        break;
    case DeltaPart::OneEdge:
        for (int i = 0; i < g.n_white; ++i) out += delta_white_one(g, i);
        break;
    }
    if (g.flavor.kind == Kind::Forest) out = detail::project_forest(out);
    return out;
}

// The full differential of fBVHgraphs (and of its forest quotient). When the
// input has no black vertices of valency < 3, every surviving term again has
// none; a violation signals a sign-convention bug, hence the assertion.
inline FormalSum delta_fbvh(const Hypergraph& g, bool check_valency = true) {
    if (!is_valid(g)) throw std::invalid_argument("delta_fbvh: inadmissible input");
    FormalSum out = delta_fbvh_part(g, DeltaPart::Black);
    out += delta_fbvh_part(g, DeltaPart::Star);
    out += delta_fbvh_part(g, DeltaPart::TwoEdge);
    out += delta_fbvh_part(g, DeltaPart::OneEdge);
    if (check_valency && is_basis_graph(g)) {
        for (const auto& [k, t] : out.terms())
            if (!is_basis_graph(t.graph))
                throw std::logic_error("delta_fbvh: sub-trivalent term survived cancellation: " +
                                       k);
    }
    return out;
}

inline FormalSum delta_fbvh(const FormalSum& s) {
    FormalSum out;
    for (const auto& [k, t] : s.terms()) {
        FormalSum part = delta_fbvh(t.graph);
        part *= t.coeff;
        out += part;
    }
    return out;
}

// Twisted differential of Hgraphs_d: black splitting plus the white-vertex
// star split coming from the element D.
inline FormalSum delta_hgraphs(const Hypergraph& g) {
    if (g.flavor.kind != Kind::Hgraphs) throw std::invalid_argument("delta_hgraphs: flavor");
    if (!is_valid(g)) throw std::invalid_argument("delta_hgraphs: invalid input");
    FormalSum out = delta_black(g);
    FormalSum star;
    for (int i = 0; i < g.n_white; ++i) star += delta_white_star(g, i);
    star *= Rational(kTwistSign * kDhatStarSign); // normalize to D's own sign
    out += star;
    return out;
}

// Differential of the full hypergraph complex fhGC_d: black splitting only.
inline FormalSum delta_fhgc(const Hypergraph& g) {
    if (g.flavor.kind != Kind::FhGC) throw std::invalid_argument("delta_fhgc: flavor");
    return delta_black(g);
}

// Lie bracket of fhGC_d: sum of cyclic compositions over pairs of black
// vertices (erase both, reattach the dangling flags among the opponent's
// vertices in all possible ways).
inline FormalSum bracket_fhgc(const Hypergraph& a, const Hypergraph& b) {
    if (a.flavor != b.flavor || a.flavor.kind != Kind::FhGC)
        throw std::invalid_argument("bracket_fhgc: flavor");
    FormalSum out;
    for (int v1 = 0; v1 < a.n_black; ++v1) {
        for (int v2 = 0; v2 < b.n_black; ++v2) {
            int presign = detail::strip_front_sign(a, black_atom(v1)) *
                          detail::strip_front_sign(b, black_atom(v2));
            std::vector<Att> f1 = attachments_at(a, black(v1)),
                             f2 = attachments_at(b, black(v2));
            const int nb1 = a.n_black - 1;
            std::vector<V> t2, t1;
            for (int x = 0; x < b.n_black; ++x)
                if (x != v2) t2.push_back(black(nb1 + detail::black_remap(x, v2)));
            for (int x = 0; x < a.n_black; ++x)
                if (x != v1) t1.push_back(black(detail::black_remap(x, v1)));
            std::vector<int> radix(f1.size(), (int)t2.size());
            radix.insert(radix.end(), f2.size(), (int)t1.size());
            detail::for_each_choice(radix, [&](const std::vector<int>& c) {
                Hypergraph r;
                r.flavor = a.flavor;
                r.n_black = a.n_black + b.n_black - 2;
                auto m1 = [&](V x) { return black(detail::black_remap(x.idx, v1)); };
                auto m2 = [&](V x) { return black(nb1 + detail::black_remap(x.idx, v2)); };
                for (const Hyperedge& he : a.hyperedges)
                    r.hyperedges.push_back({m1(he[0]), m1(he[1]), m1(he[2])});
                int h_off = (int)a.hyperedges.size();
                for (const Hyperedge& he : b.hyperedges)
                    r.hyperedges.push_back({m2(he[0]), m2(he[1]), m2(he[2])});
                for (size_t k = 0; k < f1.size(); ++k)
                    r.hyperedges[f1[k].index][f1[k].slot] = t2[c[k]];
                for (size_t k = 0; k < f2.size(); ++k)
                    r.hyperedges[h_off + f2[k].index][f2[k].slot] = t1[c[f1.size() + k]];
                std::vector<Atom> word;
                detail::append_graph_word(a, word, v1);
                detail::append_graph_word(b, word, v2, -1, -1, 0, h_off, nb1);
                out.add_canonical(r, Rational(presign) * word_sign(r, word));
            });
        }
    }
    return out;
}

} // namespace hyperoperad
