#include <hyperoperad/canonical.hpp>
#include <iostream>
using namespace hyperoperad;
int main() {
    Hypergraph g;
    g.flavor = fbvh(); g.n_white = 2; g.n_black = 2;
    g.hyperedges.push_back({white(0), black(0), black(1)});
    g.hyperedges.push_back({white(1), black(0), black(1)});
    SignedGraph sg = canonicalize(g);
    std::cout << "square zero? " << sg.zero << " sign " << sg.sign << "\n";

    Hypergraph a; // A1 vs A3 merging test
    a.flavor = fbvh(); a.n_white = 2; a.n_black = 2;
    a.hyperedges.push_back({white(0), white(1), black(0)});
    a.hyperedges.push_back({white(0), black(0), black(1)});
    Hypergraph b;
    b.flavor = fbvh(); b.n_white = 2; b.n_black = 2;
    b.hyperedges.push_back({white(0), white(1), black(1)});
    b.hyperedges.push_back({white(0), black(0), black(1)});
    auto ca = canonicalize(a), cb = canonicalize(b);
    std::cout << "A1: " << ca.key << " sign " << ca.sign << "\n";
    std::cout << "A3: " << cb.key << " sign " << cb.sign << "\n";
    return 0;
}
