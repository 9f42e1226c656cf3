#include <hyperoperad/compose.hpp>
#include <hyperoperad/generators.hpp>
#include <iostream>
using namespace hyperoperad;
int main() {
    // exact stored form produced by compose for the square term
    Hypergraph r;
    r.flavor = fbvh(); r.n_white = 2; r.n_black = 2;
    r.hyperedges.push_back({white(0), black(1), black(0)});
    r.hyperedges.push_back({black(0), white(1), black(1)});
    auto c = canonicalize(r);
    std::cout << "zero? " << c.zero << " sign " << c.sign << " key " << (c.zero?"-":c.key) << "\n";

    Hypergraph star; star.flavor = fbvh(); star.n_white = 2; star.n_black = 1;
    star.hyperedges.push_back({white(0), white(1), black(0)});
    FormalSum s = compose_bvh(star, 1, star, 0);
    std::cout << s.str() << "\n";
    return 0;
}
