#include <algorithm>
#include <unordered_map>
#include <vector>

#include "sgt/diagram.hpp"

namespace sgt {

namespace {

struct Traversal {
    std::vector<int> code;
    std::vector<int> order;   // nodes in discovery order
    std::vector<int> offset;  // per node (indexed by node)
};

class Canonizer {
public:
    Canonizer(const Diagram& d, CanonicalOptions opts) : view_(d), opts_(opts) {
        if (opts_.anchor_vertices) opts_.keep_vertex_ids = true;
    }

    Diagram run() {
        auto comps = view_.components();
        std::vector<Traversal> best;
        for (const auto& comp : comps) best.push_back(best_traversal(comp));
        std::sort(best.begin(), best.end(), [](const Traversal& a, const Traversal& b) { return a.code < b.code; });
        return relabel(best);
    }

private:
    DiagramView view_;
    CanonicalOptions opts_;

    bool anchored(int node) const { return opts_.anchor_vertices && !view_.is_crossing(node); }

    Traversal traverse(int root, int slot) const {
        Traversal t;
        t.offset.assign(static_cast<std::size_t>(view_.node_count()), -1);
        std::vector<int> index(static_cast<std::size_t>(view_.node_count()), -1);
        auto discover = [&](int node, int s) {
            if (index[node] >= 0) return;
            index[node] = static_cast<int>(t.order.size());
            t.order.push_back(node);
            t.offset[node] = anchored(node) ? 0 : s;
        };
        discover(root, slot);
        for (std::size_t q = 0; q < t.order.size(); ++q) {
            int node = t.order[q];
            int deg = view_.degree(node);
            bool crossing = view_.is_crossing(node);
            t.code.push_back(crossing ? 1 : 0);
            if (!crossing && opts_.keep_vertex_ids) t.code.push_back(view_.node_id(node));
            t.code.push_back(deg);
            if (crossing && !opts_.shadow) t.code.push_back(t.offset[node] % 2);
            for (int r = 0; r < deg; ++r) {
                Port o = view_.other_end({node, (t.offset[node] + r) % deg});
                discover(o.node, o.slot);
                int odeg = view_.degree(o.node);
                t.code.push_back(index[o.node]);
                t.code.push_back(((o.slot - t.offset[o.node]) % odeg + odeg) % odeg);
            }
        }
        return t;
    }

    Traversal best_traversal(const std::vector<int>& comp) const {
        std::vector<Port> roots;
        int anchor = -1;
        if (opts_.keep_vertex_ids)
            for (int node : comp)
                if (!view_.is_crossing(node) && (anchor < 0 || view_.node_id(node) < view_.node_id(anchor)))
                    anchor = node;
        if (anchor >= 0) {
            int deg = view_.degree(anchor);
            if (deg == 0 || anchored(anchor))
                roots.push_back({anchor, 0});
            else
                for (int s = 0; s < deg; ++s) roots.push_back({anchor, s});
        } else {
            for (int node : comp) {
                int deg = view_.degree(node);
                if (deg == 0) roots.push_back({node, 0});
                for (int s = 0; s < deg; ++s) roots.push_back({node, s});
            }
        }
        Traversal best;
        bool have = false;
        for (Port r : roots) {
            Traversal t = traverse(r.node, r.slot);
            if (!have || t.code < best.code) best = std::move(t), have = true;
        }
        return best;
    }

    Diagram relabel(const std::vector<Traversal>& parts) const {
        Diagram out;
        std::unordered_map<Label, Label> names;
        int next_vertex = 1, next_crossing = 1;
        auto name = [&](Label l) {
            auto [it, fresh] = names.emplace(l, static_cast<Label>(names.size() + 1));
            return it->second;
        };
        for (const Traversal& t : parts) {
            for (int node : t.order) {
                int deg = view_.degree(node);
                int off = t.offset[node];
                if (!view_.is_crossing(node)) {
                    Vertex v{opts_.keep_vertex_ids ? view_.node_id(node) : next_vertex++, {}};
                    for (int r = 0; r < deg; ++r) v.arcs.push_back(name(view_.label({node, (off + r) % deg})));
                    out.vertices.push_back(std::move(v));
                    continue;
                }
                std::array<Label, 4> fresh{};
                for (int r = 0; r < 4; ++r) fresh[(off + r) % 4] = name(view_.label({node, (off + r) % 4}));
                int start = opts_.shadow ? off : off - off % 2;
                Crossing c{next_crossing++, {}};
                for (int r = 0; r < 4; ++r) c.arcs[r] = fresh[(start + r) % 4];
                out.crossings.push_back(c);
            }
        }
        out.sort_by_id();
        return out;
    }
};

}  // namespace

Diagram canonical_form(const Diagram& d, CanonicalOptions opts) { return Canonizer(d, opts).run(); }

std::string canonical_code(const Diagram& d, CanonicalOptions opts) { return emit_pd(canonical_form(d, opts)); }

bool isomorphic(const Diagram& a, const Diagram& b, CanonicalOptions opts) {
    if (a.vertices.size() != b.vertices.size() || a.crossings.size() != b.crossings.size()) return false;
    return canonical_code(a, opts) == canonical_code(b, opts);
}

}  // namespace sgt
