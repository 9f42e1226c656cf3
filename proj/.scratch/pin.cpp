#include <hyperoperad/differential.hpp>
#include <iostream>
using namespace hyperoperad;

int main() {
    // --- Lemma (3.5): delta_black(D) + D o_{1,0} D = 0 in fHgraphs-like setting.
    // D lives in the Hgraphs flavor but composition is via the BVH machinery?
    // Hgraphs composition = flag reattachment only; reuse compose via FBVH data.
    Hypergraph D = twist_d(3);
    std::cout << "D valid: " << is_valid(D) << "\n";
    FormalSum dD = delta_black(D);
    std::cout << "delta_black(D):\n" << dD.str() << "\n\n";
    // composition D o_{1,0} D: Hgraphs has no white-composition implemented yet;
    // emulate with FBVH flavor (same data, edges empty).
    Hypergraph Df = D; Df.flavor = fbvh();
    FormalSum DD = compose_bvh(Df, 1, Df, 0);
    std::cout << "D o D (fbvh flavor):\n" << DD.str() << "\n\n";
    // reflavor dD to fbvh for comparison
    FormalSum dDf;
    for (auto& [k, t] : dD.terms()) { Hypergraph h = t.graph; h.flavor = fbvh(); dDf.add_canonical(h, t.coeff); }
    FormalSum s = dDf + DD;
    std::cout << "sum:\n" << s.str() << "\n\n";

    // --- Lemma (4.6): delta_black(Dhat) + Dhat o Dhat = 0 in fBVHgraphs.
    FormalSum Dh = dhat();
    std::cout << "Dhat:\n" << Dh.str() << "\n\n";
    FormalSum dDh;
    for (auto& [k, t] : Dh.terms()) { FormalSum p = delta_black(t.graph); p *= t.coeff; dDh += p; }
    FormalSum DhDh = compose(Dh, 1, Dh, 0);
    std::cout << "delta_black(Dhat):\n" << dDh.str() << "\n\n";
    std::cout << "Dhat o Dhat:\n" << DhDh.str() << "\n\n";
    FormalSum mc = dDh + DhDh;
    std::cout << "MC sum:\n" << mc.str() << "\n";
    return 0;
}
