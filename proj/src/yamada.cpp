#include "sgt/yamada.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "sgt/errors.hpp"

namespace sgt {

std::string to_string(EquivalenceMode mode) {
    switch (mode) {
        case EquivalenceMode::Pliable: return "pliable";
        case EquivalenceMode::Flat: return "flat";
        case EquivalenceMode::Ribbon: return "ribbon";
    }
    return "?";
}

EquivalenceMode parse_mode(std::string_view text) {
    if (text == "pliable") return EquivalenceMode::Pliable;
    if (text == "flat") return EquivalenceMode::Flat;
    if (text == "ribbon") return EquivalenceMode::Ribbon;
    throw InputError("unknown mode '" + std::string(text) + "' (expected pliable, flat or ribbon)");
}

namespace {

constexpr std::size_t kCacheLimit = 1u << 18;
thread_local std::unordered_map<std::string, LaurentPoly> t_memo;

// Sub-diagram induced by `nodes`, with vertex `cut` (if >= 0) restricted to
// the given slots.
Diagram induced(const DiagramView& view, const std::vector<int>& nodes, int cut, const std::vector<int>& cut_slots) {
    const Diagram& d = view.diagram();
    Diagram out;
    if (cut >= 0) {
        Vertex v{d.vertices[cut].id, {}};
        for (int s : cut_slots) v.arcs.push_back(d.vertices[cut].arcs[s]);
        out.vertices.push_back(std::move(v));
    }
    for (int n : nodes) {
        if (view.is_crossing(n))
            out.crossings.push_back(d.crossings[n - view.vertex_count()]);
        else
            out.vertices.push_back(d.vertices[n]);
    }
    return out;
}

// Splits at a vertex whose removal disconnects the map. Returns the pieces
// (each including a copy of the vertex) or an empty list.
std::vector<Diagram> wedge_split(const DiagramView& view) {
    const int n = view.node_count();
    for (int v = 0; v < view.vertex_count(); ++v) {
        int deg = view.degree(v);
        if (deg < 2) continue;
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int k = 0; k < view.dart_count(); ++k) {
            int a = view.port(k).node, b = view.port(view.partner(k)).node;
            if (a != v && b != v) parent[find(a)] = find(b);
        }
        // group v's slots by the side they lead to; direct loops stand alone
        std::vector<std::pair<int, std::vector<int>>> groups;  // (root or -1-loopid, slots)
        std::vector<bool> done(static_cast<std::size_t>(deg), false);
        for (int s = 0; s < deg; ++s) {
            if (done[s]) continue;
            Port o = view.other_end({v, s});
            if (o.node == v) {
                done[s] = done[o.slot] = true;
                groups.push_back({-1 - s, {s, o.slot}});
                continue;
            }
            int r = find(o.node);
            auto it = std::find_if(groups.begin(), groups.end(), [r](const auto& g) { return g.first == r; });
            if (it == groups.end())
                groups.push_back({r, {s}});
            else
                it->second.push_back(s);
            done[s] = true;
        }
        if (groups.size() < 2) continue;
        std::vector<Diagram> pieces;
        for (auto& [root, slots] : groups) {
            std::sort(slots.begin(), slots.end());
            std::vector<int> nodes;
            if (root >= 0)
                for (int u = 0; u < n; ++u)
                    if (u != v && find(u) == root) nodes.push_back(u);
            pieces.push_back(induced(view, nodes, v, slots));
        }
        return pieces;
    }
    return {};
}

int default_pick(const DiagramView& view) {
    // prefer a crossing with a kink or touching a vertex; its smoothings
    // tend to produce loops and cut edges early
    int fallback = view.vertex_count();
    for (int c = view.vertex_count(); c < view.node_count(); ++c) {
        for (int s = 0; s < 4; ++s) {
            Port o = view.other_end({c, s});
            if (o.node == c) return c;
            if (!view.is_crossing(o.node)) fallback = fallback == view.vertex_count() ? c : fallback;
        }
    }
    return fallback;
}

LaurentPoly recurse(const Diagram& d, const std::function<int(int)>* pick) {
    if (d.crossings.empty()) return h_polynomial(underlying_graph(d));
    DiagramView view(d);
    auto comps = view.components();
    if (comps.size() > 1) {
        LaurentPoly r(1);
        for (const auto& comp : comps) {
            r = r * recurse(induced(view, comp, -1, {}), pick);
            if (r.is_zero()) break;
        }
        return r;
    }
    auto pieces = wedge_split(view);
    if (!pieces.empty()) {
        LaurentPoly r(1);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            r = r * recurse(pieces[i], pick);
            if (i > 0) r = -r;
            if (r.is_zero()) break;
        }
        return r;
    }

    std::string key;
    if (!pick) {
        key = canonical_code(d);
        if (auto it = t_memo.find(key); it != t_memo.end()) return it->second;
    }
    int node = pick ? view.vertex_count() + (*pick)(d.crossing_number()) % d.crossing_number() : default_pick(view);
    int id = view.node_id(node);
    LaurentPoly r = recurse(smooth_crossing(d, id, Smoothing::Plus), pick).mul_monomial(1, 1) +
                    recurse(smooth_crossing(d, id, Smoothing::Minus), pick).mul_monomial(1, -1) +
                    recurse(smooth_crossing(d, id, Smoothing::Zero), pick);
    if (!pick) {
        if (t_memo.size() >= kCacheLimit) t_memo.clear();
        t_memo.emplace(std::move(key), r);
    }
    return r;
}

}  // namespace

LaurentPoly yamada(const Diagram& d) {
    validate(d);
    return recurse(d, nullptr);
}

LaurentPoly yamada(const Diagram& d, const std::function<int(int)>& pick) {
    validate(d);
    return recurse(d, &pick);
}

LaurentPoly yamada_statesum(const Diagram& d, int max_crossings) {
    const int k = d.crossing_number();
    if (k > max_crossings)
        throw std::invalid_argument("state sum limited to " + std::to_string(max_crossings) + " crossings, got " +
                                    std::to_string(k));
    DiagramView view(d);
    const int nv = view.vertex_count();
    const int darts = view.dart_count();
    long long states = 1;
    for (int i = 0; i < k; ++i) states *= 3;

    std::vector<int> spin(static_cast<std::size_t>(k), 0);  // 0: +1, 1: -1, 2: vertex
    LaurentPoly total;
    std::vector<int> parent(static_cast<std::size_t>(darts));
    for (long long s = 0; s < states; ++s) {
        long long code = s;
        int n1 = 0, n2 = 0;
        for (int i = 0; i < k; ++i) {
            spin[i] = static_cast<int>(code % 3);
            code /= 3;
            n1 += spin[i] == 0;
            n2 += spin[i] == 1;
        }
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (int x = 0; x < darts; ++x) unite(x, view.partner(x));
        for (int i = 0; i < k; ++i) {
            int base = view.dart({nv + i, 0});
            if (spin[i] == 0) unite(base, base + 1), unite(base + 2, base + 3);
            if (spin[i] == 1) unite(base + 1, base + 2), unite(base + 3, base);
        }
        // nodes of the state graph: vertices and spin-0 crossings
        auto is_terminal = [&](int x) {
            int node = view.port(x).node;
            return node < nv || spin[node - nv] == 2;
        };
        AbstractGraph g;
        for (int v = 0; v < nv + k; ++v)
            if (v < nv || spin[v - nv] == 2) g.add_vertex(v);
        std::vector<int> first_end(static_cast<std::size_t>(darts), -1);
        std::vector<bool> has_terminal(static_cast<std::size_t>(darts), false);
        for (int x = 0; x < darts; ++x) {
            if (!is_terminal(x)) continue;
            int r = find(x);
            has_terminal[r] = true;
            if (first_end[r] < 0)
                first_end[r] = x;
            else
                g.add_edge(view.port(first_end[r]).node, view.port(x).node);
        }
        int circles = 0;
        for (int x = 0; x < darts; ++x)
            if (find(x) == x && !has_terminal[x]) ++circles;
        for (int c = 0; c < circles; ++c) {
            int v = g.add_vertex();
            g.add_edge(v, v);
        }
        total += h_polynomial(g).mul_monomial(1, n1 - n2);
    }
    return total;
}

LaurentPoly canonicalize(const LaurentPoly& p, EquivalenceMode mode) {
    if (mode == EquivalenceMode::Ribbon || p.is_zero()) return p;
    int m = p.min_degree();
    return p.mul_monomial(m % 2 ? -1 : 1, -m);
}

bool equivalent(const LaurentPoly& p, const LaurentPoly& q, EquivalenceMode mode) {
    return canonicalize(p, mode) == canonicalize(q, mode);
}

void clear_yamada_cache() { t_memo.clear(); }

}  // namespace sgt
