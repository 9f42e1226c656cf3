#include <hyperoperad/differential.hpp>
#include <iostream>
using namespace hyperoperad;
static int min_val(const Hypergraph& g) {
    int m = 99;
    for (int b = 0; b < g.n_black; ++b) m = std::min(m, valency(g, black(b)));
    return m;
}
int main() {
    Hypergraph g; g.flavor = fhgc(3); g.n_black = 4;
    g.hyperedges = {{black(0),black(1),black(2)},{black(0),black(1),black(2)},
                    {black(0),black(1),black(3)},{black(0),black(2),black(3)},
                    {black(1),black(2),black(3)}};
    auto c = canonicalize(g);
    std::cout << "strict hGC graph zero? " << c.zero << "\n";
    FormalSum d = delta_fhgc(g);
    int bad = 0;
    for (auto& [k, t] : d.terms()) if (min_val(t.graph) < 3) { ++bad; if (bad<=4) std::cout << "SUBTRIV " << to_string(t.coeff) << " * " << k << "\n"; }
    std::cout << "terms " << d.size() << " subtriv " << bad << "\n";
    return 0;
}
