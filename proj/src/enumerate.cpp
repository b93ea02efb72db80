#include "sgt/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "sgt/parallel.hpp"

namespace sgt {

namespace {

// A generated shadow together with each node's port order (slot -> port).
struct Built {
    Diagram d;
    std::vector<std::vector<int>> rot;
};

struct EdgeEnds {
    int n1, p1, n2, p2;
};

std::vector<EdgeEnds> edge_ends(const SystemArchitecture& arch) {
    std::vector<EdgeEnds> out;
    for (const ArchEdge& e : arch.edges) {
        int n1 = arch.node_index(e.from.node), n2 = arch.node_index(e.to.node);
        out.push_back({n1, arch.port_index(n1, e.from.port), n2, arch.port_index(n2, e.to.port)});
    }
    return out;
}

void append(std::string& s, int v) {
    char buf[sizeof v];
    std::memcpy(buf, &v, sizeof v);
    s.append(buf, sizeof v);
}

// Nodes are listed in architecture order with ports named, so only the
// crossings are free to be relabelled; they are numbered by discovery and
// read from the slot through which they were first reached.
std::string port_aware_key(const Built& b) {
    DiagramView view(b.d);
    const int nv = view.vertex_count();
    std::vector<int> index(static_cast<std::size_t>(view.node_count()), -1);
    std::vector<int> offset(static_cast<std::size_t>(view.node_count()), 0);
    std::vector<int> order;
    std::string key;
    auto describe = [&](Port o) {
        if (o.node < nv) {
            append(key, 0);
            append(key, o.node);
            append(key, b.rot[o.node][o.slot]);
            return;
        }
        if (index[o.node] < 0) {
            index[o.node] = static_cast<int>(order.size());
            offset[o.node] = o.slot;
            order.push_back(o.node);
        }
        append(key, 1);
        append(key, index[o.node]);
        append(key, (o.slot - offset[o.node] + 4) % 4);
    };
    for (int v = 0; v < nv; ++v) {
        int deg = view.degree(v);
        int start = 0;
        for (int s = 0; s < deg; ++s)
            if (b.rot[v][s] == 0) start = s;
        append(key, -1);
        for (int r = 0; r < deg; ++r) {
            int s = (start + r) % deg;
            append(key, b.rot[v][s]);
            describe(view.other_end({v, s}));
        }
    }
    for (std::size_t q = 0; q < order.size(); ++q) {
        int x = order[q];
        append(key, -2);
        for (int r = 0; r < 4; ++r) describe(view.other_end({x, (offset[x] + r) % 4}));
    }
    return key;
}

// Starts each vertex's arc list at the slot holding port 0.
void normalize_rotations(Built& b) {
    for (std::size_t v = 0; v < b.rot.size(); ++v) {
        auto& r = b.rot[v];
        auto it = std::find(r.begin(), r.end(), 0);
        if (it == r.end()) continue;
        auto k = it - r.begin();
        std::rotate(r.begin(), it, r.end());
        auto& arcs = b.d.vertices[v].arcs;
        std::rotate(arcs.begin(), arcs.begin() + k, arcs.end());
    }
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int i = 0; i <= total; ++i) {
        cur.push_back(i);
        compositions(total - i, parts - 1, cur, out);
        cur.pop_back();
    }
}

struct Pass {
    int edge, index;
};

// Perfect matchings of `passes`, optionally at most one pair per edge pair.
template <class F>
void matchings(const std::vector<Pass>& passes, std::vector<bool>& used, std::vector<std::pair<int, int>>& cur,
               std::map<std::pair<int, int>, int>* pair_count, F&& emit) {
    int first = -1;
    for (std::size_t i = 0; i < passes.size(); ++i)
        if (!used[i]) {
            first = static_cast<int>(i);
            break;
        }
    if (first < 0) {
        emit(cur);
        return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < passes.size(); ++j) {
        if (used[j]) continue;
        std::pair<int, int> ep{std::min(passes[first].edge, passes[j].edge), std::max(passes[first].edge, passes[j].edge)};
        if (pair_count && (*pair_count)[ep] > 0) continue;
        if (pair_count) ++(*pair_count)[ep];
        used[j] = true;
        cur.emplace_back(first, static_cast<int>(j));
        matchings(passes, used, cur, pair_count, emit);
        cur.pop_back();
        used[j] = false;
        if (pair_count) --(*pair_count)[ep];
    }
    used[first] = false;
}

std::vector<std::vector<int>> port_orders(const ArchNode& node) {
    std::vector<int> ports(node.ports.size());
    std::iota(ports.begin(), ports.end(), 0);
    if (node.fixed_port_order || ports.size() <= 2) return {ports};
    std::vector<std::vector<int>> out;
    do {
        out.push_back(ports);
    } while (std::next_permutation(ports.begin() + 1, ports.end()));
    return out;
}

struct Found {
    std::string key;
    Diagram d;
};

struct ItemResult {
    std::vector<Found> found;
    std::size_t candidates = 0, planar = 0;
};

// Segment j of edge e runs from pass j-1 (or the from-port) to pass j (or the
// to-port).
struct Segments {
    std::vector<int> base;
    Label label(int e, int j) const { return base[e] + j + 1; }
};

}  // namespace

std::vector<Diagram> enumerate_shadows(const SystemArchitecture& arch, int k, const ShadowOptions& opts,
                                       ShadowStats* stats) {
    if (k < 0) throw InputError("crossing number must be non-negative, got " + std::to_string(k));
    validate(arch);
    const auto ends = edge_ends(arch);
    const int m = static_cast<int>(ends.size());
    const int n = static_cast<int>(arch.nodes.size());
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    if (m == 0) {
        if (k == 0) comps.push_back({});
    } else {
        compositions(2 * k, m, cur, comps);
    }
    std::vector<std::vector<std::vector<int>>> orders;
    for (const ArchNode& node : arch.nodes) orders.push_back(port_orders(node));

    std::vector<ItemResult> results(comps.size());
    parallel_for(comps.size(), opts.workers, [&](std::size_t item) {
        const std::vector<int>& comp = comps[item];
        ItemResult& res = results[item];
        std::unordered_map<std::string, bool> seen;
        Segments seg;
        std::vector<Pass> passes;
        for (int e = 0; e < m; ++e) {
            seg.base.push_back(e == 0 ? 0 : seg.base.back() + comp[e - 1] + 1);
            for (int j = 0; j < comp[e]; ++j) passes.push_back({e, j});
        }
        std::vector<std::vector<Label>> port_label(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) port_label[v].resize(arch.nodes[v].ports.size());
        for (int e = 0; e < m; ++e) {
            port_label[ends[e].n1][ends[e].p1] = seg.label(e, 0);
            port_label[ends[e].n2][ends[e].p2] = seg.label(e, comp[e]);
        }
        std::vector<bool> used(passes.size(), false);
        std::vector<std::pair<int, int>> match;
        std::map<std::pair<int, int>, int> pair_count;
        matchings(passes, used, match, opts.cap_pair_crossings ? &pair_count : nullptr,
                  [&](const std::vector<std::pair<int, int>>& pairs) {
                      const int c = static_cast<int>(pairs.size());
                      for (int signs = 0; signs < (1 << c); ++signs) {
                          Built b;
                          for (int x = 0; x < c; ++x) {
                              const Pass& a = passes[pairs[x].first];
                              const Pass& q = passes[pairs[x].second];
                              Label i1 = seg.label(a.edge, a.index), o1 = seg.label(a.edge, a.index + 1);
                              Label i2 = seg.label(q.edge, q.index), o2 = seg.label(q.edge, q.index + 1);
                              Crossing cr{x + 1, {i1, i2, o1, o2}};
                              if (signs >> x & 1) cr.arcs = {i1, o2, o1, i2};
                              b.d.crossings.push_back(cr);
                          }
                          for (int v = 0; v < n; ++v) b.d.vertices.push_back({v + 1, {}});
                          b.rot.assign(static_cast<std::size_t>(n), {});
                          // odometer over the port orders of all nodes
                          std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
                          for (;;) {
                              for (int v = 0; v < n; ++v) {
                                  b.rot[v] = orders[v][pick[v]];
                                  auto& arcs = b.d.vertices[v].arcs;
                                  arcs.clear();
                                  for (int p : b.rot[v]) arcs.push_back(port_label[v][p]);
                              }
                              ++res.candidates;
                              if (is_planar(b.d)) {
                                  ++res.planar;
                                  std::string key = port_aware_key(b);
                                  if (seen.emplace(key, true).second) res.found.push_back({std::move(key), b.d});
                              }
                              int v = 0;
                              while (v < n && ++pick[v] == orders[v].size()) pick[v++] = 0;
                              if (v == n) break;
                          }
                      }
                  });
    });

    std::unordered_map<std::string, std::size_t> where;
    std::vector<Found> all;
    ShadowStats st;
    for (ItemResult& res : results) {
        st.candidates += res.candidates;
        st.planar += res.planar;
        for (Found& f : res.found) {
            if (where.count(f.key)) continue;
            where.emplace(f.key, all.size());
            all.push_back(std::move(f));
            if (opts.limit && all.size() > opts.limit)
                throw LimitExceeded("more than " + std::to_string(opts.limit) + " shadows with " +
                                    std::to_string(k) + " crossings");
        }
    }
    std::sort(all.begin(), all.end(), [](const Found& a, const Found& b) { return a.key < b.key; });
    st.shadows = all.size();
    if (stats) *stats = st;
    std::vector<Diagram> out;
    out.reserve(all.size());
    for (Found& f : all) out.push_back(std::move(f.d));
    return out;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Chord {
    int edge;
    double ax, ay, bx, by;  // from-end to to-end
    int ga, gb;             // positions in the global ccw order of ends
};

Built circular_shadow(const SystemArchitecture& arch, const std::vector<int>& order) {
    const auto ends = edge_ends(arch);
    const int n = static_cast<int>(arch.nodes.size());
    const int m = static_cast<int>(ends.size());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    // Ends at each node in ccw order along the circle: chords by decreasing
    // ccw distance to their target, so chords from one node never cross;
    // parallel strands nest; loops go last as adjacent pairs (petals).
    struct End {
        int edge;
        bool from;
        int port;
    };
    std::vector<std::vector<End>> cluster(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<std::tuple<int, int>, End>> chords;
        std::vector<End> loops;
        for (int e = 0; e < m; ++e) {
            const EdgeEnds& ee = ends[e];
            if (ee.n1 == v && ee.n2 == v) {
                loops.push_back({e, true, ee.p1});
                loops.push_back({e, false, ee.p2});
                continue;
            }
            for (bool from : {true, false}) {
                int here = from ? ee.n1 : ee.n2, there = from ? ee.n2 : ee.n1;
                if (here != v) continue;
                int dist = ((pos[there] - pos[v]) % n + n) % n;
                int strand = pos[v] < pos[there] ? e : -e;
                chords.push_back({{-dist, strand}, {e, from, from ? ee.p1 : ee.p2}});
            }
        }
        std::sort(chords.begin(), chords.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& c : chords) cluster[v].push_back(c.second);
        for (auto& l : loops) cluster[v].push_back(l);
    }

    // Coordinates: nodes perturbed off the regular polygon so that no three
    // chords meet in a point; ends spread slightly around their node.
    std::vector<std::array<double, 2>> from_xy(m), to_xy(m);
    std::vector<int> from_g(m), to_g(m);
    int g = 0;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        double base = 2 * kPi * i / n + 0.07 * std::sin(1.7 * i + 0.3) / std::max(n, 1);
        int cnt = static_cast<int>(cluster[v].size());
        double spread = 0.2 / std::max(n, 1) / std::max(cnt, 1);
        for (int j = 0; j < cnt; ++j) {
            double a = base + spread * (j - (cnt - 1) / 2.0);
            const End& end = cluster[v][j];
            auto& xy = end.from ? from_xy[end.edge] : to_xy[end.edge];
            xy = {std::cos(a), std::sin(a)};
            (end.from ? from_g : to_g)[end.edge] = g++;
        }
    }

    // Crossings: interleaving chord pairs; positions along each chord from the
    // line intersection parameters.
    struct Hit {
        double t;
        int crossing;
    };
    std::vector<std::vector<Hit>> hits(static_cast<std::size_t>(m));
    struct XPair {
        int e1, e2;
        bool ccw;  // e2 turns counterclockwise relative to e1
    };
    std::vector<XPair> xs;
    auto inside = [](int x, int lo, int hi) { return lo < x && x < hi; };
    for (int e1 = 0; e1 < m; ++e1) {
        if (ends[e1].n1 == ends[e1].n2) continue;
        for (int e2 = e1 + 1; e2 < m; ++e2) {
            if (ends[e2].n1 == ends[e2].n2) continue;
            int lo = std::min(from_g[e1], to_g[e1]), hi = std::max(from_g[e1], to_g[e1]);
            if (inside(from_g[e2], lo, hi) == inside(to_g[e2], lo, hi)) continue;
            double px = from_xy[e1][0], py = from_xy[e1][1];
            double rx = to_xy[e1][0] - px, ry = to_xy[e1][1] - py;
            double qx = from_xy[e2][0], qy = from_xy[e2][1];
            double sx = to_xy[e2][0] - qx, sy = to_xy[e2][1] - qy;
            double den = rx * sy - ry * sx;
            double t = ((qx - px) * sy - (qy - py) * sx) / den;
            double u = ((qx - px) * ry - (qy - py) * rx) / den;
            int id = static_cast<int>(xs.size());
            xs.push_back({e1, e2, den > 0});
            hits[e1].push_back({t, id});
            hits[e2].push_back({u, id});
        }
    }
    Segments seg;
    for (int e = 0; e < m; ++e) {
        seg.base.push_back(e == 0 ? 0 : seg.base.back() + static_cast<int>(hits[e - 1].size()) + 1);
        std::sort(hits[e].begin(), hits[e].end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
    }
    auto index_on = [&](int e, int crossing) {
        for (std::size_t j = 0; j < hits[e].size(); ++j)
            if (hits[e][j].crossing == crossing) return static_cast<int>(j);
        return -1;
    };
    Built b;
    for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
        const XPair& xp = xs[x];
        int j1 = index_on(xp.e1, x), j2 = index_on(xp.e2, x);
        Label i1 = seg.label(xp.e1, j1), o1 = seg.label(xp.e1, j1 + 1);
        Label i2 = seg.label(xp.e2, j2), o2 = seg.label(xp.e2, j2 + 1);
        Crossing cr{x + 1, {i1, i2, o1, o2}};
        if (!xp.ccw) cr.arcs = {i1, o2, o1, i2};
        b.d.crossings.push_back(cr);
    }
    b.rot.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        Vertex vert{v + 1, {}};
        // counterclockwise around the node is clockwise along the circle
        for (auto it = cluster[v].rbegin(); it != cluster[v].rend(); ++it) {
            int e = it->edge;
            vert.arcs.push_back(it->from ? seg.label(e, 0) : seg.label(e, static_cast<int>(hits[e].size())));
            b.rot[v].push_back(it->port);
        }
        b.d.vertices.push_back(std::move(vert));
    }
    normalize_rotations(b);
    return b;
}

std::vector<int> resolve_order(const SystemArchitecture& arch, const std::vector<std::string>& order) {
    if (order.size() != arch.nodes.size())
        throw InputError("circular order must list all " + std::to_string(arch.nodes.size()) + " nodes");
    std::vector<int> out;
    std::vector<bool> seen(arch.nodes.size(), false);
    for (const std::string& id : order) {
        int v = arch.node_index(id);
        if (v < 0) throw InputError("circular order: unknown node '" + id + "'");
        if (seen[v]) throw InputError("circular order: node '" + id + "' listed twice");
        seen[v] = true;
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<Diagram> enumerate_circular(const SystemArchitecture& arch,
                                        const std::optional<std::vector<std::string>>& order) {
    validate(arch);
    if (arch.model != EquivalenceMode::Pliable)
        throw InputError("the circular generator derives port orders from the layout; it needs the pliable model");
    std::vector<std::vector<int>> orders;
    if (order) {
        orders.push_back(resolve_order(arch, *order));
    } else {
        if (arch.nodes.size() > 9) throw InputError("more than 9 nodes: give an explicit circular order");
        std::vector<int> o(arch.nodes.size());
        std::iota(o.begin(), o.end(), 0);
        do {
            orders.push_back(o);
        } while (!o.empty() && std::next_permutation(o.begin() + 1, o.end()));
    }
    std::map<std::string, Diagram> found;
    for (const auto& o : orders) {
        Built b = circular_shadow(arch, o);
        found.emplace(port_aware_key(b), std::move(b.d));
    }
    std::vector<Diagram> out;
    for (auto& [key, d] : found) out.push_back(std::move(d));
    return out;
}

std::size_t interleaving_pairs(const SystemArchitecture& arch, const std::vector<std::string>& order) {
    validate(arch);
    auto o = resolve_order(arch, order);
    std::vector<int> pos(o.size());
    for (std::size_t i = 0; i < o.size(); ++i) pos[o[i]] = static_cast<int>(i);
    auto ends = edge_ends(arch);
    std::size_t count = 0;
    for (std::size_t a = 0; a < ends.size(); ++a)
        for (std::size_t b = a + 1; b < ends.size(); ++b) {
            int a1 = pos[ends[a].n1], a2 = pos[ends[a].n2], b1 = pos[ends[b].n1], b2 = pos[ends[b].n2];
            if (a1 == a2 || b1 == b2) continue;
            if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) continue;
            int lo = std::min(a1, a2), hi = std::max(a1, a2);
            if ((lo < b1 && b1 < hi) != (lo < b2 && b2 < hi)) ++count;
        }
    return count;
}

std::vector<Diagram> resolve(const Diagram& shadow) {
    const int c = shadow.crossing_number();
    if (c > 30) throw InputError("too many crossings to resolve: " + std::to_string(c));
    std::vector<Diagram> out;
    out.reserve(std::size_t{1} << c);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << c); ++mask) {
        Diagram d = shadow;
        for (int i = 0; i < c; ++i)
            if (mask >> i & 1) {
                auto& a = d.crossings[i].arcs;
                std::rotate(a.begin(), a.begin() + 1, a.end());
            }
        out.push_back(std::move(d));
    }
    return out;
}

std::size_t ClassReport::degenerate_members() const {
    std::size_t n = 0;
    for (const YamadaClass& c : classes)
        if (c.degenerate) n += c.members.size();
    return n;
}

ClassReport classify(const std::vector<Diagram>& diagrams, EquivalenceMode mode, int workers) {
    ClassReport report;
    report.mode = mode;
    report.diagrams = diagrams.size();
    std::vector<LaurentPoly> raw(diagrams.size());
    parallel_for(diagrams.size(), workers, [&](std::size_t i) { raw[i] = yamada(diagrams[i]); });

    std::map<LaurentPoly, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < diagrams.size(); ++i) groups[canonicalize(raw[i], mode)].push_back(i);
    for (auto& [key, members] : groups) {
        YamadaClass cls;
        cls.key = key;
        cls.degenerate = key.is_zero();
        cls.min_crossings = diagrams[members.front()].crossing_number();
        for (std::size_t i : members) {
            cls.members.push_back({i, diagrams[i].crossing_number()});
            cls.min_crossings = std::min(cls.min_crossings, diagrams[i].crossing_number());
        }
        bool have = false;
        for (std::size_t i : members) {
            if (diagrams[i].crossing_number() != cls.min_crossings) continue;
            std::string pd = emit_pd(canonical_form(diagrams[i]));
            if (!have || pd < cls.representative_pd) {
                cls.representative_pd = std::move(pd);
                cls.representative = i;
                have = true;
            }
        }
        cls.representative_raw = raw[cls.representative];
        report.classes.push_back(std::move(cls));
    }
    std::stable_sort(report.classes.begin(), report.classes.end(), [](const YamadaClass& a, const YamadaClass& b) {
        if (a.degenerate != b.degenerate) return b.degenerate;
        if (a.min_crossings != b.min_crossings) return a.min_crossings < b.min_crossings;
        return a.key < b.key;
    });
    return report;
}

std::pair<SystemArchitecture, SystemArchitecture> condense(const SystemArchitecture& arch,
                                                           const std::set<std::string>& subset) {
    validate(arch);
    if (subset.empty()) throw InputError("subset is empty");
    std::vector<bool> in(arch.nodes.size(), false);
    for (const std::string& id : subset) {
        int v = arch.node_index(id);
        if (v < 0) throw InputError("subset: unknown node '" + id + "'");
        in[v] = true;
    }
    if (subset.size() == arch.nodes.size()) throw InputError("subset contains every node");

    auto fresh_id = [&](std::string id) {
        while (arch.node_index(id) >= 0) id += "_";
        return id;
    };
    const bool fixed = arch.model != EquivalenceMode::Pliable;
    SystemArchitecture outer, inner;
    outer.model = inner.model = arch.model;
    ArchNode super{fresh_id("super"), {}, fixed};
    ArchNode rest{fresh_id("rest"), {}, fixed};
    for (std::size_t v = 0; v < arch.nodes.size(); ++v) (in[v] ? inner : outer).nodes.push_back(arch.nodes[v]);
    for (const ArchEdge& e : arch.edges) {
        bool a = in[arch.node_index(e.from.node)], b = in[arch.node_index(e.to.node)];
        if (a && b) {
            inner.edges.push_back(e);
        } else if (!a && !b) {
            outer.edges.push_back(e);
        } else {
            const ArchEndpoint& inside = a ? e.from : e.to;
            const ArchEndpoint& outside = a ? e.to : e.from;
            std::string in_port = inside.node + "." + inside.port;
            std::string out_port = outside.node + "." + outside.port;
            super.ports.push_back(in_port);
            rest.ports.push_back(out_port);
            ArchEdge oe = e, ie = e;
            (a ? oe.from : oe.to) = {super.id, in_port};
            (a ? ie.to : ie.from) = {rest.id, out_port};
            outer.edges.push_back(oe);
            inner.edges.push_back(ie);
        }
    }
    if (super.ports.empty()) throw InputError("subset has no boundary edges: the system is disconnected there");
    outer.nodes.push_back(super);
    inner.nodes.push_back(rest);
    validate(outer);
    validate(inner);
    return {outer, inner};
}

std::string to_string(Generator g) { return g == Generator::Exhaustive ? "exhaustive" : "circular"; }

Generator parse_generator(std::string_view text) {
    if (text == "exhaustive") return Generator::Exhaustive;
    if (text == "circular") return Generator::Circular;
    throw InputError("unknown generator '" + std::string(text) + "' (expected exhaustive or circular)");
}

ClassReport pipeline(const SystemArchitecture& arch, int k_max, const PipelineOptions& opts) {
    if (k_max < 0) throw InputError("max crossings must be non-negative, got " + std::to_string(k_max));
    auto start = std::chrono::steady_clock::now();
    validate(arch);
    std::vector<KCount> per_k;
    std::vector<Diagram> diagrams;
    std::size_t total = 0;
    auto add = [&](KCount& kc, const std::vector<Diagram>& shadows) {
        for (const Diagram& s : shadows) {
            std::size_t n = std::size_t{1} << s.crossing_number();
            total += n;
            if (opts.limit_diagrams && total > opts.limit_diagrams)
                throw LimitExceeded("enumeration exceeds " + std::to_string(opts.limit_diagrams) + " diagrams");
            kc.diagrams += n;
            for (Diagram& d : resolve(s)) diagrams.push_back(std::move(d));
        }
    };
    if (opts.generator == Generator::Exhaustive) {
        for (int k = 0; k <= k_max; ++k) {
            ShadowOptions so;
            so.workers = opts.workers;
            so.cap_pair_crossings = opts.cap_pair_crossings;
            ShadowStats st;
            auto shadows = enumerate_shadows(arch, k, so, &st);
            KCount kc{k, st.candidates, st.planar, st.shadows, 0};
            add(kc, shadows);
            per_k.push_back(kc);
        }
    } else {
        auto shadows = enumerate_circular(arch, opts.circular_order);
        for (int k = 0; k <= k_max; ++k) {
            std::vector<Diagram> at_k;
            for (const Diagram& s : shadows)
                if (s.crossing_number() == k) at_k.push_back(s);
            KCount kc{k, at_k.size(), at_k.size(), at_k.size(), 0};
            add(kc, at_k);
            per_k.push_back(kc);
        }
    }
    ClassReport report = classify(diagrams, arch.model, opts.workers);
    report.generator = to_string(opts.generator);
    report.max_crossings = k_max;
    report.per_k = std::move(per_k);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace sgt
