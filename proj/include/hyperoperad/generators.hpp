#pragma once

#include "compose.hpp"

namespace hyperoperad {

// The arity-(n+1) commutative corolla: no edges, no hyperedges.
inline Hypergraph com_corolla(int arity, Flavor f = fbvh()) {
    Hypergraph g;
    g.flavor = f;
    g.n_white = arity;
    return g;
}

// Image of the BV operator: a single solid edge between the two white vertices.
inline Hypergraph delta_edge(Flavor f = fbvh()) {
    Hypergraph g;
    g.flavor = f;
    g.n_white = 2;
    g.edges.push_back({white(0), white(1)});
    return g;
}

inline Hypergraph hyperedge_gen(int i, int j, int k, int arity, Flavor f = fbvh()) {
    Hypergraph g;
    g.flavor = f;
    g.n_white = arity;
    g.hyperedges.push_back({white(i), white(j), white(k)});
    return g;
}

// Image of the Lie_3 generator in Hgra_d: one trivalent hyperedge on the
// three labelled vertices.
inline Hypergraph lie3(int d = 3) { return hyperedge_gen(0, 1, 2, 3, hgra(d)); }

// Maurer-Cartan element of the full hypergraph complex: one hyperedge on
// three black vertices.
inline Hypergraph gamma_mc(int d = 3) {
    Hypergraph g;
    g.flavor = fhgc(d);
    g.n_black = 3;
    g.hyperedges.push_back({black(0), black(1), black(2)});
    return g;
}

// The twisting element D of Hgraphs_d: hyperedge joining the two white
// vertices and one black vertex.
inline Hypergraph twist_d(int d = 3) {
    Hypergraph g;
    g.flavor = hgraphs(d);
    g.n_white = 2;
    g.n_black = 1;
    g.hyperedges.push_back({white(0), white(1), black(0)});
    return g;
}

// The twisting element D^ of fBVHgraphs: a two-edge path through a black
// vertex plus the hyperedge summand. The relative sign of the summands is
// the one for which delta_black(D^) + D^ o_{1,0} D^ = 0 holds under the
// orientation conventions of this library.
inline FormalSum dhat() {
    Hypergraph path;
    path.flavor = fbvh();
    path.n_white = 2;
    path.n_black = 1;
    path.edges.push_back({white(0), black(0)});
    path.edges.push_back({black(0), white(1)});

    Hypergraph star;
    star.flavor = fbvh();
    star.n_white = 2;
    star.n_black = 1;
    star.hyperedges.push_back({white(0), white(1), black(0)});

    FormalSum D;
    D.add_canonical(path, 1);
    D.add_canonical(star, 1);
    return D;
}

} // namespace hyperoperad
