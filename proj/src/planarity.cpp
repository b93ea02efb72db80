#include <algorithm>
#include <vector>

#include "sgt/diagram.hpp"
#include "sgt/errors.hpp"

namespace sgt {

bool is_planar(const Diagram& d) {
    DiagramView view(d);
    const int n = view.node_count();
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
    std::vector<int> owner(static_cast<std::size_t>(view.dart_count()));
    for (int k = 0; k < view.dart_count(); ++k) {
        Port p = view.port(k);
        rot[p.node].push_back(k);
        owner[k] = p.node;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (int u = 0; u < n; ++u) {
            while (!rot[u].empty()) {
                auto& ru = rot[u];
                // contract a non-loop map-edge, splicing the rotations
                auto it = std::find_if(ru.begin(), ru.end(), [&](int k) { return owner[view.partner(k)] != u; });
                if (it != ru.end()) {
                    int e = view.partner(*it);
                    int v = owner[e];
                    std::rotate(ru.begin(), it, ru.end());
                    ru.erase(ru.begin());
                    auto& rv = rot[v];
                    std::rotate(rv.begin(), std::find(rv.begin(), rv.end(), e), rv.end());
                    for (std::size_t j = 1; j < rv.size(); ++j) {
                        ru.push_back(rv[j]);
                        owner[rv[j]] = u;
                    }
                    rv.clear();
                    progress = true;
                    continue;
                }
                // only loops remain here: drop one whose ends are adjacent
                std::size_t m = ru.size(), j = 0;
                while (j < m && view.partner(ru[j]) != ru[(j + 1) % m]) ++j;
                if (j == m) break;
                if (j + 1 < m) {
                    ru.erase(ru.begin() + static_cast<std::ptrdiff_t>(j), ru.begin() + static_cast<std::ptrdiff_t>(j + 2));
                } else {
                    ru.pop_back();
                    ru.erase(ru.begin());
                }
                progress = true;
            }
        }
    }
    return std::all_of(rot.begin(), rot.end(), [](const auto& r) { return r.empty(); });
}

std::vector<std::vector<Port>> faces(const Diagram& d) {
    DiagramView view(d);
    std::vector<bool> used(static_cast<std::size_t>(view.dart_count()), false);
    std::vector<std::vector<Port>> out;
    for (int k = 0; k < view.dart_count(); ++k) {
        if (used[k]) continue;
        std::vector<Port> face;
        int cur = k;
        while (!used[cur]) {
            used[cur] = true;
            face.push_back(view.port(cur));
            Port arrive = view.port(view.partner(cur));
            cur = view.dart(view.rotate(arrive, -1));
        }
        out.push_back(std::move(face));
    }
    return out;
}

std::vector<int> component_genera(const Diagram& d) {
    DiagramView view(d);
    auto comps = view.components();
    std::vector<int> comp_of(static_cast<std::size_t>(view.node_count()));
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<int> V(comps.size()), E(comps.size(), 0), F(comps.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c) V[c] = static_cast<int>(comps[c].size());
    for (int k = 0; k < view.dart_count(); ++k) ++E[comp_of[view.port(k).node]];
    for (const auto& f : faces(d)) ++F[comp_of[f.front().node]];
    std::vector<int> g(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        int edges = E[c] / 2;
        int nfaces = edges == 0 ? 1 : F[c];  // an isolated point bounds one face
        int twice = 2 - V[c] + edges - nfaces;
        if (twice < 0 || twice % 2) throw InvariantViolation("face tracing produced an odd Euler characteristic");
        g[c] = twice / 2;
    }
    return g;
}

int genus_oracle(const Diagram& d) {
    auto g = component_genera(d);
    if (g.size() > 1) throw InputError("genus_oracle expects a connected diagram");
    return g.empty() ? 0 : g.front();
}

}  // namespace sgt
