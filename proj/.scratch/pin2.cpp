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
    // 1. delta(edge) and delta(corolla)
    std::cout << "delta(edge):\n" << delta_fbvh(delta_edge()).str() << "\n\n";
    std::cout << "delta(corolla3):\n" << delta_fbvh(com_corolla(3)).str() << "\n\n";

    // 2. derivation route vs direct white parts
    std::vector<Hypergraph> samples;
    samples.push_back(delta_edge());
    samples.push_back(hyperedge_gen(0,1,2,3));
    { Hypergraph g = hyperedge_gen(0,1,2,3); g.edges.push_back({white(0), white(1)}); samples.push_back(g); }
    { // hyper{0,1,b}+edges b-0, b-1
      Hypergraph g; g.flavor = fbvh(); g.n_white = 2; g.n_black = 1;
      g.hyperedges.push_back({white(0), white(1), black(0)});
      g.edges.push_back({black(0), white(0)});
      g.edges.push_back({black(0), white(1)});
      samples.push_back(g); }
    for (auto& g : samples) {
        FormalSum direct = delta_white_all(g);
        FormalSum via = derivation_from_skew(dhat(), g);
        std::cout << "derivation match: " << (direct == via) << " (terms " << direct.size() << ")\n";
        if (!(direct == via)) std::cout << FormalSum::diff(direct, via) << "\n";
    }

    // 3. delta^2 on samples
    for (auto& g : samples) {
        FormalSum d1 = delta_fbvh(g);
        FormalSum d2;
        for (auto& [k, t] : d1.terms()) { FormalSum p = delta_fbvh(t.graph); p *= t.coeff; d2 += p; }
        std::cout << "delta^2 zero: " << d2.is_zero() << " (|dG|=" << d1.size() << ")\n";
        if (!d2.is_zero()) { std::cout << d2.str() << "\n"; break; }
    }
    return 0;
}
