#include "sgt/abstract_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sgt {

bool AbstractGraph::has_vertex(int id) const {
    return std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end();
}

bool AbstractGraph::has_edge(int id) const {
    return std::any_of(edges_.begin(), edges_.end(), [id](const GraphEdge& e) { return e.id == id; });
}

std::size_t AbstractGraph::edge_index(int id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == id) return i;
    throw std::invalid_argument("unknown edge id " + std::to_string(id));
}

const GraphEdge& AbstractGraph::edge(int id) const { return edges_[edge_index(id)]; }

void AbstractGraph::add_vertex(int id) {
    if (has_vertex(id)) throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
    vertices_.push_back(id);
    next_vertex_ = std::max(next_vertex_, id + 1);
}

int AbstractGraph::add_vertex() {
    int id = next_vertex_;
    add_vertex(id);
    return id;
}

void AbstractGraph::add_edge(int id, int u, int v) {
    if (has_edge(id)) throw std::invalid_argument("duplicate edge id " + std::to_string(id));
    if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("edge endpoint is not a vertex");
    edges_.push_back({id, u, v});
    next_edge_ = std::max(next_edge_, id + 1);
}

int AbstractGraph::add_edge(int u, int v) {
    int id = next_edge_;
    add_edge(id, u, v);
    return id;
}

AbstractGraph AbstractGraph::delete_edge(int id) const {
    AbstractGraph g = *this;
    g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(edge_index(id)));
    return g;
}

AbstractGraph AbstractGraph::contract_edge(int id) const {
    const GraphEdge e = edge(id);
    if (e.is_loop()) throw std::invalid_argument("cannot contract loop edge " + std::to_string(id));
    int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
    AbstractGraph g = *this;
    g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(edge_index(id)));
    g.vertices_.erase(std::find(g.vertices_.begin(), g.vertices_.end(), gone));
    for (GraphEdge& f : g.edges_) {
        if (f.u == gone) f.u = keep;
        if (f.v == gone) f.v = keep;
    }
    return g;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

int count_components(const AbstractGraph& g, int skip_edge) {
    std::unordered_map<int, int> idx;
    for (int v : g.vertices()) idx.emplace(v, static_cast<int>(idx.size()));
    Dsu d(idx.size());
    int comps = static_cast<int>(idx.size());
    for (const GraphEdge& e : g.edges())
        if (e.id != skip_edge && d.unite(idx.at(e.u), idx.at(e.v))) --comps;
    return comps;
}

}  // namespace

int AbstractGraph::component_count() const { return count_components(*this, -1); }

bool AbstractGraph::is_cut_edge(int id) const {
    const GraphEdge& e = edge(id);
    if (e.is_loop()) return false;
    return count_components(*this, id) > component_count();
}

AbstractGraph AbstractGraph::disjoint_union(const AbstractGraph& a, const AbstractGraph& b) {
    AbstractGraph g = a;
    std::unordered_map<int, int> vmap;
    for (int v : b.vertices()) vmap[v] = g.add_vertex();
    for (const GraphEdge& e : b.edges()) g.add_edge(vmap[e.u], vmap[e.v]);
    return g;
}

}  // namespace sgt
