#include <hyperoperad/differential.hpp>
#include <iostream>
using namespace hyperoperad;
int main() {
    Hypergraph g = hyperedge_gen(0,1,2,3);
    g.edges.push_back({white(0), white(1)});
    FormalSum d1 = delta_fbvh(g, false);
    for (auto& [k, t] : d1.terms()) {
        if (!is_basis_graph(t.graph)) { std::cout << "level-1 NON-STRICT: " << k << "\n"; continue; }
        FormalSum d2 = delta_fbvh(t.graph, false);
        std::vector<std::string> bad;
        for (auto& [k2, t2] : d2.terms())
            if (!is_basis_graph(t2.graph)) bad.push_back(to_string(t2.coeff) + " * " + k2);
        if (!bad.empty()) {
            std::cout << "input t = " << k << "\n";
            for (auto& b : bad) std::cout << "   survivor " << b << "\n";
        }
    }
    return 0;
}
