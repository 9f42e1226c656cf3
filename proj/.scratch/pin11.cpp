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
    FormalSum br = bracket_fhgc(gamma_mc(3), g);
    int bad = 0;
    for (auto& [k, t] : br.terms()) if (min_val(t.graph) < 3) ++bad;
    std::cout << "bracket terms " << br.size() << " subtriv " << bad << "\n";
    FormalSum db = delta_black(g);
    // is bracket == c * delta_black for a constant c?
    for (auto& [k, t] : db.terms()) {
        Rational c = br.coeff_of(k);
        std::cout << "  db " << to_string(t.coeff) << "  br " << to_string(c) << "  " << k.substr(60, 70) << "\n";
    }
    for (auto& [k, t] : br.terms()) if (db.coeff_of(k) == 0)
        std::cout << "  br-only " << to_string(t.coeff) << " " << k.substr(60, 70) << "\n";
    // [gamma,gamma]
    FormalSum gg = bracket_fhgc(gamma_mc(3), gamma_mc(3));
    std::cout << "[gamma,gamma] = " << (gg.is_zero() ? "0" : gg.str()) << "\n";
    return 0;
}
