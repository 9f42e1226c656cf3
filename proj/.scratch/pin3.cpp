#include <hyperoperad/differential.hpp>
#include <iostream>
using namespace hyperoperad;

static FormalSum delta_white_all(const Hypergraph& g) {
    FormalSum s;
    for (int i = 0; i < g.n_white; ++i) {
        s += delta_white_star(g, i);
        s += delta_white_two(g, i);
        s += delta_white_one(g, i);
    }
    return s;
}

int main() {
    std::vector<Hypergraph> samples;
    samples.push_back(delta_edge());
    samples.push_back(hyperedge_gen(0,1,2,3));
    { Hypergraph g = hyperedge_gen(0,1,2,3); g.edges.push_back({white(0), white(1)}); samples.push_back(g); }
    { Hypergraph g; g.flavor = fbvh(); g.n_white = 2; g.n_black = 1;
      g.hyperedges.push_back({white(0), white(1), black(0)});
      g.edges.push_back({black(0), white(0)});
      g.edges.push_back({black(0), white(1)});
      samples.push_back(g); }
    int n = 0;
    for (auto& g : samples) {
        FormalSum direct = delta_white_all(g);
        FormalSum via = derivation_from_skew(dhat(), g);
        bool m = direct == via;
        std::cout << "sample " << n++ << " derivation match: " << m << "\n";
        if (!m) { std::cout << FormalSum::diff(via, direct) << "\n"; }
    }
    std::cout << "delta(edge) = " << delta_fbvh(delta_edge(), false).str() << "\n";
    std::cout << "delta(corolla3) = " << delta_fbvh(com_corolla(3), false).str() << "\n";
    for (auto& g : samples) {
        FormalSum d1 = delta_fbvh(g, false);
        FormalSum d2;
        for (auto& [k, t] : d1.terms()) { FormalSum p = delta_fbvh(t.graph, false); p *= t.coeff; d2 += p; }
        std::cout << "delta^2 zero: " << d2.is_zero() << " (|dG|=" << d1.size() << ", |d2|=" << d2.size() << ")\n";
    }
    return 0;
}
