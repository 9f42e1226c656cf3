#include <hyperoperad/differential.hpp>
#include <iostream>
using namespace hyperoperad;
int main() {
    Hypergraph t; t.flavor = fbvh(); t.n_white = 3; t.n_black = 1;
    t.edges = {{white(0),black(0)},{white(1),black(0)},{white(2),black(0)}};
    t.hyperedges = {{white(0),white(2),black(0)}};
    std::vector<std::string> K = {
    "{\"flavor\":\"fbvh\",\"arity\":3,\"blacks\":2,\"edges\":[[\"w0\",\"b1\"],[\"w1\",\"b1\"],[\"w2\",\"b1\"]],\"hyperedges\":[[\"w0\",\"w2\",\"b0\"],[\"w1\",\"b0\",\"b1\"]]}",
    "{\"flavor\":\"fbvh\",\"arity\":3,\"blacks\":2,\"edges\":[[\"w0\",\"b1\"],[\"w1\",\"b1\"],[\"w2\",\"b1\"]],\"hyperedges\":[[\"w0\",\"b0\",\"b1\"],[\"w1\",\"w2\",\"b0\"]]}",
    "{\"flavor\":\"fbvh\",\"arity\":3,\"blacks\":2,\"edges\":[[\"w0\",\"b1\"],[\"w1\",\"b1\"],[\"w2\",\"b1\"]],\"hyperedges\":[[\"w0\",\"w1\",\"b0\"],[\"w2\",\"b0\",\"b1\"]]}"};
    for (int i = 0; i < 3; ++i) {
        FormalSum s = delta_white_star(t, i);
        for (int q = 0; q < 3; ++q) {
            Rational c = s.coeff_of(K[q]);
            if (c != 0) std::cout << "star@" << i << " -> K" << q+1 << " coeff " << to_string(c) << "\n";
        }
    }
    FormalSum b = delta_black(t);
    for (int q = 0; q < 3; ++q) {
        Rational c = b.coeff_of(K[q]);
        if (c != 0) std::cout << "black -> K" << q+1 << " coeff " << to_string(c) << "\n";
    }
    return 0;
}
