#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sgt/laurent.hpp"

namespace sgt {

struct GraphEdge {
    int id;
    int u;
    int v;
    bool is_loop() const { return u == v; }
};

// Finite multigraph; loops and parallel edges allowed. Value semantics.
class AbstractGraph {
public:
    AbstractGraph() = default;

    void add_vertex(int id);           // std::invalid_argument on duplicate
    int add_vertex();                  // fresh id
    void add_edge(int id, int u, int v);
    int add_edge(int u, int v);        // fresh id

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    bool has_vertex(int id) const;
    bool has_edge(int id) const;
    const GraphEdge& edge(int id) const;  // std::invalid_argument if unknown

    AbstractGraph delete_edge(int id) const;
    // Merges the endpoints into the lower-numbered one; other u-v edges become loops.
    AbstractGraph contract_edge(int id) const;
    bool is_cut_edge(int id) const;
    int component_count() const;

    static AbstractGraph disjoint_union(const AbstractGraph& a, const AbstractGraph& b);

private:
    std::vector<int> vertices_;
    std::vector<GraphEdge> edges_;
    int next_vertex_ = 0;
    int next_edge_ = 0;
    std::size_t edge_index(int id) const;
};

// Graph polynomial H: H(empty) = 1, H(point) = -1, H(m-petal bouquet) =
// (-1)^(m-1) B^m, multiplicative over disjoint unions, zero with a cut edge,
// and H(G) = H(G/e) + H(G-e) for non-loop e. Memoized per thread.
LaurentPoly h_polynomial(const AbstractGraph& g);

// Plain deletion-contraction with no reductions and no cache; pick(n)
// chooses which of the n non-loop edges to expand next. Exponential; meant
// for cross-checking h_polynomial on small graphs.
LaurentPoly h_polynomial_reference(const AbstractGraph& g,
                                   const std::function<std::size_t(std::size_t)>& pick);

// Clears the calling thread's H cache.
void clear_h_cache();

}  // namespace sgt
