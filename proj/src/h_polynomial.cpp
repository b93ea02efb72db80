#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgt/abstract_graph.hpp"

namespace sgt {

namespace {

// Dense-index multigraph used inside the recursion.
struct Multigraph {
    int n = 0;
    std::vector<std::array<int, 2>> edges;
};

const LaurentPoly& minus_b() {
    static const LaurentPoly v = -LaurentPoly::B();
    return v;
}

constexpr std::size_t kCacheLimit = 1u << 20;
constexpr int kLeafBudget = 256;

thread_local std::unordered_map<std::string, LaurentPoly> t_cache;

LaurentPoly h_general(Multigraph g);

Multigraph contract(const Multigraph& g, std::size_t ei) {
    int a = g.edges[ei][0], b = g.edges[ei][1];
    if (a > b) std::swap(a, b);
    Multigraph r;
    r.n = g.n - 1;
    r.edges.reserve(g.edges.size() - 1);
    auto map = [&](int x) { return x == b ? a : (x > b ? x - 1 : x); };
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (i != ei) r.edges.push_back({map(g.edges[i][0]), map(g.edges[i][1])});
    return r;
}

Multigraph remove_edge(const Multigraph& g, std::size_t ei) {
    Multigraph r = g;
    r.edges.erase(r.edges.begin() + static_cast<std::ptrdiff_t>(ei));
    return r;
}

// Lowpoint DFS. Reports whether any bridge exists and one articulation point (or -1).
struct BlockScan {
    bool has_bridge = false;
    int cut_vertex = -1;
};

BlockScan scan_blocks(const Multigraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.n));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        adj[u].push_back({v, static_cast<int>(i)});
        adj[v].push_back({u, static_cast<int>(i)});
    }
    BlockScan out;
    std::vector<int> disc(static_cast<std::size_t>(g.n), -1), low(static_cast<std::size_t>(g.n), 0);
    int timer = 0;
    struct Frame {
        int v, parent_edge;
        std::size_t next;
        int children;
    };
    std::vector<Frame> st;
    st.push_back({0, -1, 0, 0});
    disc[0] = low[0] = timer++;
    while (!st.empty()) {
        Frame& f = st.back();
        if (f.next < adj[f.v].size()) {
            auto [w, eid] = adj[f.v][f.next++];
            if (eid == f.parent_edge) continue;
            if (disc[w] < 0) {
                disc[w] = low[w] = timer++;
                ++f.children;
                st.push_back({w, eid, 0, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
            continue;
        }
        Frame done = f;
        st.pop_back();
        if (st.empty()) {
            if (done.children > 1 && out.cut_vertex < 0) out.cut_vertex = done.v;
            break;
        }
        Frame& p = st.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (low[done.v] > disc[p.v]) out.has_bridge = true;
        if (st.size() > 1 && low[done.v] >= disc[p.v] && out.cut_vertex < 0) out.cut_vertex = p.v;
    }
    return out;
}

int distinct_count(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

// Canonical form of a connected loopless multigraph: colour refinement
// followed by individualisation of the first non-trivial cell. Gives up
// (returns nullopt) if the search tree grows beyond kLeafBudget leaves.
class Canonizer {
public:
    explicit Canonizer(const Multigraph& g) : n_(g.n), mult_(static_cast<std::size_t>(g.n * g.n), 0) {
        for (auto [u, v] : g.edges) {
            ++mult_[static_cast<std::size_t>(u * n_ + v)];
            ++mult_[static_cast<std::size_t>(v * n_ + u)];
        }
    }

    std::optional<std::string> run() {
        std::vector<int> colors(static_cast<std::size_t>(n_), 0);
        refine(colors);
        search(colors);
        if (leaves_ > kLeafBudget) return std::nullopt;
        return best_;
    }

private:
    int n_;
    std::vector<int> mult_;
    std::string best_;
    int leaves_ = 0;

    int m(int u, int v) const { return mult_[static_cast<std::size_t>(u * n_ + v)]; }

    void refine(std::vector<int>& colors) const {
        int ncolors = distinct_count(colors);
        while (true) {
            std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                std::vector<int>& s = sig[v];
                std::vector<std::pair<int, int>> nb;
                for (int u = 0; u < n_; ++u)
                    if (m(v, u)) nb.push_back({colors[u], m(v, u)});
                std::sort(nb.begin(), nb.end());
                s.push_back(colors[v]);
                for (auto [c, k] : nb) s.push_back(c), s.push_back(k);
            }
            std::vector<std::vector<int>> uniq = sig;
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            for (int v = 0; v < n_; ++v)
                colors[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
            int now = static_cast<int>(uniq.size());
            if (now == ncolors) return;
            ncolors = now;
        }
    }

    void search(const std::vector<int>& colors) {
        if (leaves_ > kLeafBudget) return;
        std::vector<int> count(static_cast<std::size_t>(n_), 0);
        for (int c : colors) ++count[c];
        int target = -1;
        for (int c = 0; c < n_; ++c)
            if (count[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            ++leaves_;
            std::vector<int> order(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) order[colors[v]] = v;
            std::string key;
            key.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2 + 2));
            key.push_back(static_cast<char>(n_));
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j) key.push_back(static_cast<char>(m(order[i], order[j]) + 1));
            if (best_.empty() || key < best_) best_ = std::move(key);
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (colors[v] != target) continue;
            std::vector<int> next(static_cast<std::size_t>(n_));
            for (int w = 0; w < n_; ++w) next[w] = 2 * colors[w] + ((colors[w] == target && w != v) ? 1 : 0);
            refine(next);
            search(next);
        }
    }
};


// Connected, loopless, at least two vertices.
LaurentPoly h_connected(const Multigraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges) ++deg[u], ++deg[v];
    for (int v = 0; v < g.n; ++v) {
        if (deg[v] == 1) return LaurentPoly();  // pendant edge is a cut edge
        if (deg[v] == 2) {
            // series edge: G - e has a pendant edge, so H(G) = H(G/e)
            for (std::size_t i = 0; i < g.edges.size(); ++i)
                if (g.edges[i][0] == v || g.edges[i][1] == v) return h_general(contract(g, i));
        }
    }
    BlockScan scan = scan_blocks(g);
    if (scan.has_bridge) return LaurentPoly();
    if (scan.cut_vertex >= 0) {
        // wedge rule: H(G1 v G2) = -H(G1) H(G2), one factor per block side
        int c = scan.cut_vertex;
        std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
        int ncomp = 0;
        for (int s = 0; s < g.n; ++s) {
            if (s == c || comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [u, v] : g.edges) {
                    int y = u == x ? v : (v == x ? u : -1);
                    if (y >= 0 && y != c && comp[y] < 0) comp[y] = ncomp, stack.push_back(y);
                }
            }
            ++ncomp;
        }
        LaurentPoly result(1);
        for (int k = 0; k < ncomp; ++k) {
            std::vector<int> idx(static_cast<std::size_t>(g.n), -1);
            Multigraph part;
            idx[c] = part.n++;
            for (int v = 0; v < g.n; ++v)
                if (comp[v] == k) idx[v] = part.n++;
            for (auto [u, v] : g.edges) {
                int side = comp[u] >= 0 ? comp[u] : comp[v];
                if (side == k) part.edges.push_back({idx[u], idx[v]});
            }
            result = result * h_general(std::move(part));
            if (k > 0) result = -result;
            if (result.is_zero()) break;
        }
        return result;
    }

    std::optional<std::string> key;
    if (g.n <= 60) key = Canonizer(g).run();
    if (key) {
        auto it = t_cache.find(*key);
        if (it != t_cache.end()) return it->second;
    }

    // expand an edge of the heaviest parallel class
    std::size_t pick = 0;
    int best = -1;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        int mult = 0;
        for (auto [u, v] : g.edges)
            if ((u == g.edges[i][0] && v == g.edges[i][1]) || (u == g.edges[i][1] && v == g.edges[i][0])) ++mult;
        int score = mult * 1000 + deg[g.edges[i][0]] + deg[g.edges[i][1]];
        if (score > best) best = score, pick = i;
    }
    LaurentPoly r = h_general(contract(g, pick)) + h_general(remove_edge(g, pick));
    if (key) {
        if (t_cache.size() >= kCacheLimit) t_cache.clear();
        t_cache.emplace(std::move(*key), r);
    }
    return r;
}

LaurentPoly h_general(Multigraph g) {
    int loops = 0;
    std::erase_if(g.edges, [&](const std::array<int, 2>& e) { return e[0] == e[1] ? (++loops, true) : false; });
    // split into components
    std::vector<int> parent(static_cast<std::size_t>(g.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges) parent[find(u)] = find(v);
    std::vector<int> root_slot(static_cast<std::size_t>(g.n), -1), local(static_cast<std::size_t>(g.n));
    std::vector<Multigraph> parts;
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        if (root_slot[r] < 0) root_slot[r] = static_cast<int>(parts.size()), parts.emplace_back();
        local[v] = parts[root_slot[r]].n++;
    }
    for (auto [u, v] : g.edges) parts[root_slot[find(u)]].edges.push_back({local[u], local[v]});

    LaurentPoly result = minus_b().pow(static_cast<unsigned>(loops));
    for (const Multigraph& p : parts) {
        result = result * (p.edges.empty() ? LaurentPoly(-1) : h_connected(p));
        if (result.is_zero()) break;
    }
    return result;
}

Multigraph to_multigraph(const AbstractGraph& g) {
    std::unordered_map<int, int> idx;
    Multigraph m;
    for (int v : g.vertices()) idx.emplace(v, m.n++);
    for (const GraphEdge& e : g.edges()) m.edges.push_back({idx.at(e.u), idx.at(e.v)});
    return m;
}

LaurentPoly h_reference(const Multigraph& g, const std::function<std::size_t(std::size_t)>& pick) {
    std::vector<std::size_t> nonloop;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (g.edges[i][0] != g.edges[i][1]) nonloop.push_back(i);
    if (nonloop.empty()) {
        std::vector<unsigned> petals(static_cast<std::size_t>(g.n), 0);
        for (auto [u, v] : g.edges) ++petals[u];
        LaurentPoly r(1);
        for (unsigned m : petals)
            r = r * (m == 0 ? LaurentPoly(-1) : LaurentPoly::B().pow(m).mul_monomial(m % 2 ? 1 : -1, 0));
        return r;
    }
    std::size_t e = nonloop[pick(nonloop.size()) % nonloop.size()];
    return h_reference(contract(g, e), pick) + h_reference(remove_edge(g, e), pick);
}

}  // namespace

LaurentPoly h_polynomial(const AbstractGraph& g) { return h_general(to_multigraph(g)); }

LaurentPoly h_polynomial_reference(const AbstractGraph& g,
                                   const std::function<std::size_t(std::size_t)>& pick) {
    return h_reference(to_multigraph(g), pick);
}

void clear_h_cache() { t_cache.clear(); }

}  // namespace sgt
