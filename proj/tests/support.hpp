#pragma once
// Shared generators for property tests: random moves, random rotation
// systems and a small diagram corpus.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/errors.hpp"
#include "sgt/moves.hpp"

namespace sgt::support {

inline std::vector<MoveKind> all_kinds() {
    std::vector<MoveKind> out;
    for (int k = 0; k <= static_cast<int>(MoveKind::R6Remove); ++k) out.push_back(static_cast<MoveKind>(k));
    return out;
}

inline bool grows(MoveKind k) {
    return k == MoveKind::R1Add || k == MoveKind::R2Add || k == MoveKind::R5Flip || k == MoveKind::R5Spin ||
           k == MoveKind::R6Add || k == MoveKind::R4;
}

inline MoveKind inverse(MoveKind k) {
    switch (k) {
        case MoveKind::R1Add: return MoveKind::R1Remove;
        case MoveKind::R1Remove: return MoveKind::R1Add;
        case MoveKind::R2Add: return MoveKind::R2Remove;
        case MoveKind::R2Remove: return MoveKind::R2Add;
        case MoveKind::R5Flip: return MoveKind::R5Unflip;
        case MoveKind::R5Unflip: return MoveKind::R5Flip;
        case MoveKind::R5Spin: return MoveKind::R5Unspin;
        case MoveKind::R5Unspin: return MoveKind::R5Spin;
        case MoveKind::R6Add: return MoveKind::R6Remove;
        case MoveKind::R6Remove: return MoveKind::R6Add;
        default: return k;
    }
}

struct Step {
    MoveSpec move;
    Diagram result;
};

// A uniformly chosen kind, then a random site of that kind whose result has
// at most `max_crossings` crossings; R6 is skipped in pliable mode when the
// diagram has a vertex of valence > 3.
template <class Rng>
std::optional<Step> random_move(const Diagram& d, EquivalenceMode mode, Rng& rng, int max_crossings = 9) {
    std::vector<MoveKind> kinds;
    for (MoveKind k : all_kinds()) {
        if (!move_allowed(k, mode)) continue;
        if (grows(k) && d.crossing_number() >= max_crossings) continue;
        if ((k == MoveKind::R6Add || k == MoveKind::R6Remove) && d.max_valence() > 3) continue;
        kinds.push_back(k);
    }
    std::shuffle(kinds.begin(), kinds.end(), rng);
    for (MoveKind k : kinds) {
        auto sites = candidate_moves(d, mode, {k});
        std::shuffle(sites.begin(), sites.end(), rng);
        for (const MoveSpec& m : sites) {
            try {
                Diagram e = apply_move(d, m, mode);
                if (e.crossing_number() <= max_crossings) return Step{m, std::move(e)};
            } catch (const MoveError&) {
            }
        }
    }
    return std::nullopt;
}

// Random connected rotation system: `n` map-vertices, some of them 4-valent
// crossings, the rest flat vertices; arbitrary cyclic orders.
template <class Rng>
Diagram random_rotation_system(Rng& rng, int n) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::vector<Label>> ends(static_cast<std::size_t>(n));
    Label next = 1;
    auto join = [&](int u, int v) {
        ends[u].push_back(next);
        ends[v].push_back(next);
        ++next;
    };
    for (int v = 1; v < n; ++v) join(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    int extra = std::uniform_int_distribution<int>(0, n + 2)(rng);
    for (int i = 0; i < extra; ++i) join(pick(rng), pick(rng));
    Diagram d;
    int vid = 1, xid = 1;
    for (auto& e : ends) {
        std::shuffle(e.begin(), e.end(), rng);
        if (e.size() == 4 && rng() % 2)
            d.crossings.push_back({xid++, {e[0], e[1], e[2], e[3]}});
        else
            d.vertices.push_back({vid++, e});
    }
    return d;
}

inline SystemArchitecture arch_from(const std::vector<int>& valence, const std::vector<std::pair<int, int>>& edges,
                                    EquivalenceMode model = EquivalenceMode::Pliable) {
    SystemArchitecture a;
    a.model = model;
    std::vector<int> used(valence.size(), 0);
    for (std::size_t v = 0; v < valence.size(); ++v) {
        ArchNode n{std::to_string(v), {}, model != EquivalenceMode::Pliable};
        for (int p = 0; p < valence[v]; ++p) n.ports.push_back(std::string(1, static_cast<char>('a' + p)));
        a.nodes.push_back(n);
    }
    int id = 0;
    for (auto [u, v] : edges) {
        ArchEdge e{"e" + std::to_string(++id), {std::to_string(u), std::string(1, static_cast<char>('a' + used[u]++))},
                   {std::to_string(v), std::string(1, static_cast<char>('a' + used[v]++))}};
        a.edges.push_back(e);
    }
    return a;
}

inline SystemArchitecture theta_arch(EquivalenceMode m = EquivalenceMode::Pliable) {
    return arch_from({3, 3}, {{0, 1}, {0, 1}, {0, 1}}, m);
}
inline SystemArchitecture handcuff_arch() { return arch_from({3, 3}, {{0, 0}, {0, 1}, {1, 1}}); }
inline SystemArchitecture doubled_square_arch(EquivalenceMode m = EquivalenceMode::Pliable) {
    return arch_from({3, 3, 3, 3}, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}}, m);
}
inline SystemArchitecture k4_arch() {
    return arch_from({3, 3, 3, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Diagrams with at most three crossings: the worked examples plus every
// resolution of a spread of generated shadows.
inline std::vector<Diagram> corpus() {
    std::vector<Diagram> out{fixtures::theta(),         fixtures::twisted_theta(), fixtures::hopf_handcuff(),
                             fixtures::clasped_theta(), fixtures::doubled_square(), fixtures::k4()};
    struct Source {
        SystemArchitecture arch;
        int k;
        std::size_t stride;
    };
    std::vector<Source> sources{{theta_arch(), 1, 1},         {theta_arch(), 2, 5},  {theta_arch(), 3, 97},
                                {handcuff_arch(), 2, 3},      {handcuff_arch(), 3, 101},
                                {doubled_square_arch(), 1, 7}, {k4_arch(), 2, 211}};
    for (const Source& s : sources) {
        auto shadows = enumerate_shadows(s.arch, s.k);
        for (std::size_t i = 0; i < shadows.size(); i += s.stride)
            for (Diagram& d : resolve(shadows[i])) out.push_back(std::move(d));
    }
    return out;
}

}  // namespace sgt::support
