#include <hyperoperad/differential.hpp>
#include <iostream>
using namespace hyperoperad;
int main() {
    // triple-hyperedge graph on 3 blacks (paper: delta = 0 since no bivalents can be created)
    Hypergraph g3; g3.flavor = fhgc(3); g3.n_black = 3;
    g3.hyperedges = {{black(0),black(1),black(2)},{black(0),black(1),black(2)},{black(0),black(1),black(2)}};
    std::cout << "delta(triple-hyper) = " << delta_fhgc(g3).str() << "\n\n";

    // K4-style hGC graph: 4 blacks, 4 hyperedges, every vertex exactly trivalent
    Hypergraph g4; g4.flavor = fhgc(3); g4.n_black = 4;
    g4.hyperedges = {{black(0),black(1),black(2)},{black(0),black(1),black(3)},
                     {black(0),black(2),black(3)},{black(1),black(2),black(3)}};
    std::cout << "g4 zero? " << canonicalize(g4).zero << "\n";
    FormalSum d = delta_fhgc(g4);
    int bad = 0;
    for (auto& [k, t] : d.terms()) {
        bool strict = true;
        for (int b = 0; b < t.graph.n_black; ++b)
            if (valency(t.graph, black(b)) < 3) strict = false;
        if (!strict) { ++bad; if (bad <= 6) std::cout << "SUBTRIV " << to_string(t.coeff) << " * " << k << "\n"; }
    }
    std::cout << "g4: " << d.size() << " terms, " << bad << " sub-trivalent\n";
    // delta^2
    FormalSum dd;
    for (auto& [k, t] : d.terms()) { FormalSum p = delta_fhgc(t.graph); p *= t.coeff; dd += p; }
    std::cout << "delta^2(g4) zero: " << dd.is_zero() << "\n";
    return 0;
}
