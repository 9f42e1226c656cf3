#include <hyperoperad/differential.hpp>
#include <iostream>
using namespace hyperoperad;
int main() {
    Hypergraph t; t.flavor = fbvh(); t.n_white = 3; t.n_black = 1;
    t.edges = {{white(0),black(0)},{white(1),black(0)},{white(2),black(0)}};
    t.hyperedges = {{white(0),white(2),black(0)}};
    const char* names[4] = {"black","star","two","one"};
    for (int p = 0; p < 4; ++p) {
        FormalSum s = delta_fbvh_part(t, (DeltaPart)p);
        std::cout << "== part " << names[p] << ":\n";
        for (auto& [k, tt] : s.terms())
            if (!is_basis_graph(tt.graph)) std::cout << "  SUBTRIV " << to_string(tt.coeff) << " * " << k << "\n";
    }
    return 0;
}
