#include <hyperoperad/differential.hpp>
#include <iostream>
using namespace hyperoperad;
static FormalSum project_strict(const FormalSum& s) {
    FormalSum out;
    for (auto& [k, t] : s.terms())
        if (is_basis_graph(t.graph)) { SignedGraph sg; sg.zero=false; sg.sign=1; sg.graph=t.graph; sg.key=k; out.add(sg, t.coeff); }
    return out;
}
int main() {
    std::vector<Hypergraph> seeds;
    seeds.push_back(delta_edge());
    seeds.push_back(hyperedge_gen(0,1,2,3));
    { Hypergraph g = hyperedge_gen(0,1,2,3); g.edges.push_back({white(0), white(1)}); seeds.push_back(g); }
    { Hypergraph g; g.flavor = fbvh(); g.n_white = 2; g.n_black = 1;
      g.hyperedges = {{white(0), white(1), black(0)}};
      g.edges = {{black(0), white(0)},{black(0), white(1)}}; seeds.push_back(g); }
    { Hypergraph g; g.flavor = fbvh(); g.n_white = 3; g.n_black = 1;
      g.edges = {{white(0),black(0)},{white(1),black(0)},{white(2),black(0)}};
      g.hyperedges = {{white(0),white(2),black(0)}}; seeds.push_back(g); }
    // collect strict graphs over 2 rounds of projected delta
    std::map<std::string, Hypergraph> pool;
    for (auto& s : seeds) { auto c = canonicalize(s); if (!c.zero) pool[c.key] = c.graph; }
    for (int round = 0; round < 2; ++round) {
        std::map<std::string, Hypergraph> next = pool;
        for (auto& [k, g] : pool) {
            FormalSum d = project_strict(delta_fbvh(g, false));
            for (auto& [k2, t] : d.terms()) next[k2] = t.graph;
        }
        pool = next;
        if (pool.size() > 300) break;
    }
    std::cout << "pool size " << pool.size() << "\n";
    int fails = 0;
    for (auto& [k, g] : pool) {
        FormalSum d1 = project_strict(delta_fbvh(g, false));
        FormalSum d2;
        for (auto& [k2, t] : d1.terms()) { FormalSum p = project_strict(delta_fbvh(t.graph, false)); p *= t.coeff; d2 += p; }
        if (!d2.is_zero()) { ++fails; std::cout << "PD^2 != 0 for " << k << "\n"; }
    }
    std::cout << "projected d^2 failures: " << fails << "\n";
    return 0;
}
