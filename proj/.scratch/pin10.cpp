#include <hyperoperad/differential.hpp>
#include <iostream>
using namespace hyperoperad;
// replicate delta_black loop with provenance printing for terms matching a target key
int main() {
    Hypergraph g; g.flavor = fhgc(3); g.n_black = 4;
    g.hyperedges = {{black(0),black(1),black(2)},{black(0),black(1),black(2)},
                    {black(0),black(1),black(3)},{black(0),black(2),black(3)},
                    {black(1),black(2),black(3)}};
    std::string X = "{\"flavor\":\"fhgc\",\"d\":3,\"arity\":0,\"blacks\":5,\"edges\":[],\"hyperedges\":[[\"b0\",\"b1\",\"b4\"],[\"b0\",\"b2\",\"b3\"],[\"b1\",\"b2\",\"b4\"],[\"b1\",\"b3\",\"b4\"],[\"b2\",\"b3\",\"b4\"],[\"b2\",\"b3\",\"b4\"]]}";
    for (int v = 0; v < g.n_black; ++v) {
        int presign = detail::strip_front_sign(g, black_atom(v));
        std::vector<Att> atts = attachments_at(g, black(v));
        std::vector<V> targets;
        for (int b = 0; b < g.n_black; ++b) if (b != v) targets.push_back(black(b));
        const int v1 = g.n_black - 1, v2 = g.n_black;
        for (unsigned mask = 0; mask < (1u << atts.size()); ++mask) {
            for (V t : targets) {
                Hypergraph r; r.flavor = g.flavor; r.n_white = g.n_white; r.n_black = g.n_black + 1;
                auto remap = [&](V x){ return is_black(x) ? black(detail::black_remap(x.idx, v)) : x; };
                for (const Hyperedge& he : g.hyperedges) r.hyperedges.push_back({remap(he[0]), remap(he[1]), remap(he[2])});
                for (size_t k = 0; k < atts.size(); ++k) {
                    V dst = (mask >> k) & 1 ? black(v2) : black(v1);
                    r.hyperedges[atts[k].index][atts[k].slot] = dst;
                }
                int NH = (int)g.hyperedges.size();
                r.hyperedges.push_back({remap(t), black(v1), black(v2)});
                std::vector<Atom> word = {flag_atom(NH,0), flag_atom(NH,1), flag_atom(NH,2), star_atom(NH), black_atom(v1), black_atom(v2)};
                detail::append_graph_word(g, word, v);
                auto c = canonicalize(r, presign * word_sign(r, word));
                if (!c.zero && c.key == X)
                    std::cout << "v=" << v << " mask=" << mask << " t=b" << t.idx << " sign " << c.sign << "\n";
            }
        }
    }
    return 0;
}
