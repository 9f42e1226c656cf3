#include <hyperoperad/differential.hpp>
#include <iostream>
using namespace hyperoperad;
int main() {
    Hypergraph t; t.flavor = fbvh(); t.n_white = 3; t.n_black = 1;
    t.edges = {{white(0),black(0)},{white(1),black(0)},{white(2),black(0)}};
    t.hyperedges = {{white(0),white(2),black(0)}};
    FormalSum a = delta_black(t), b = delta_black(t);
    std::cout << "deterministic: " << (a == b) << "\n";
    std::cout << a.str().substr(0, 400) << "\n...\ntotal terms: " << a.size() << "\n";
    // inspect one specific raw construction: split with flag staying on v1, edges on v2, hang = w1
    Hypergraph r; r.flavor = fbvh(); r.n_white = 3; r.n_black = 2;
    r.edges = {{white(0),black(1)},{white(1),black(1)},{white(2),black(1)}};
    r.hyperedges = {{white(0),white(2),black(0)},{white(1),black(0),black(1)}};
    auto c1 = canonicalize(r);
    std::cout << "K1-raw canon: zero=" << c1.zero << " sign=" << c1.sign << "\n key=" << (c1.zero?"-":c1.key) << "\n";
    return 0;
}
