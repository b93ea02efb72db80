#pragma once
// Independent reference computations used only by the tests.

#include <numeric>
#include <vector>

#include "sgt/abstract_graph.hpp"
#include "sgt/laurent.hpp"

namespace sgt::oracle {

// Subset expansion H(G) = sum_S (-1)^{c(V,S)} (-(B+1))^{nullity(S)}, i.e. the
// Tutte-style closed form; shares no code with deletion-contraction.
inline LaurentPoly h_subset(const AbstractGraph& g) {
    const auto& vs = g.vertices();
    const auto& es = g.edges();
    std::vector<int> idx_of(static_cast<std::size_t>(*std::max_element(vs.begin(), vs.end()) + 1), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) idx_of[vs[i]] = static_cast<int>(i);
    const LaurentPoly q = -(LaurentPoly::B() + 1);
    std::vector<LaurentPoly> qpow{LaurentPoly(1)};
    for (std::size_t i = 0; i < es.size(); ++i) qpow.push_back(qpow.back() * q);
    LaurentPoly total;
    for (unsigned long mask = 0; mask < (1ul << es.size()); ++mask) {
        std::vector<int> p(vs.size());
        std::iota(p.begin(), p.end(), 0);
        auto find = [&](int x) {
            while (p[x] != x) x = p[x] = p[p[x]];
            return x;
        };
        int comps = static_cast<int>(vs.size()), size = 0;
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (!(mask >> i & 1ul)) continue;
            ++size;
            int a = find(idx_of[es[i].u]), b = find(idx_of[es[i].v]);
            if (a != b) p[a] = b, --comps;
        }
        int nullity = size - static_cast<int>(vs.size()) + comps;
        total += qpow[static_cast<std::size_t>(nullity)].mul_monomial(comps % 2 ? -1 : 1, 0);
    }
    return total;
}

inline AbstractGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    AbstractGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace sgt::oracle
