#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgt/architecture.hpp"
#include "sgt/diagram.hpp"
#include "sgt/errors.hpp"
#include "sgt/laurent.hpp"
#include "sgt/yamada.hpp"

namespace sgt {

// Enumeration grew past the configured limit.
struct LimitExceeded : InputError {
    using InputError::InputError;
};

struct ShadowOptions {
    int workers = 1;
    bool cap_pair_crossings = false;  // at most one crossing per pair of edges
    std::size_t limit = 0;            // max unique shadows, 0 = unlimited
};

struct ShadowStats {
    std::size_t candidates = 0;  // rotation systems generated
    std::size_t planar = 0;      // of which planar
    std::size_t shadows = 0;     // unique after dedup
};

// All planar shadows with exactly k crossings. Vertex ids are node indices
// + 1 and each vertex lists its arcs starting at the node's first port; the
// strand through crossing slots 0,2 is the earlier pass in generation order.
// Sorted by a port-aware canonical key. InputError if k < 0.
std::vector<Diagram> enumerate_shadows(const SystemArchitecture& arch, int k, const ShadowOptions& opts = {},
                                       ShadowStats* stats = nullptr);

// Nodes on a circle and edges as straight chords. With no order, every
// ordering with the first node fixed is tried (at most 9 nodes) and the
// distinct shadows are returned. Pliable model only.
std::vector<Diagram> enumerate_circular(const SystemArchitecture& arch,
                                        const std::optional<std::vector<std::string>>& order = std::nullopt);

// Number of chord pairs whose endpoints interleave for the given ordering,
// counting a bundle of parallel edges once per strand.
std::size_t interleaving_pairs(const SystemArchitecture& arch, const std::vector<std::string>& order);

// All 2^c over/under assignments; bit i of the index flips crossing i.
std::vector<Diagram> resolve(const Diagram& shadow);

struct ClassMember {
    std::size_t index = 0;  // position in the classified list
    int crossings = 0;
};

struct YamadaClass {
    LaurentPoly key;  // canonical polynomial
    bool degenerate = false;
    std::vector<ClassMember> members;  // ascending index
    std::size_t representative = 0;    // input index
    int min_crossings = 0;
    std::string representative_pd;  // canonical PD text
    LaurentPoly representative_raw;  // yamada of the representative
};

struct KCount {
    int k = 0;
    std::size_t candidates = 0;
    std::size_t planar = 0;
    std::size_t shadows = 0;
    std::size_t diagrams = 0;
};

struct ClassReport {
    EquivalenceMode mode = EquivalenceMode::Pliable;
    std::string generator;  // "exhaustive", "circular" or empty
    int max_crossings = -1;
    std::vector<KCount> per_k;
    std::size_t diagrams = 0;
    std::vector<YamadaClass> classes;  // nondegenerate by (min crossings, key), then degenerate
    double seconds = 0;                // wall time, not serialized

    std::size_t degenerate_members() const;
};

// Partition by canonicalize(yamada(d), mode). The representative has the
// fewest crossings, ties broken by least canonical PD text.
ClassReport classify(const std::vector<Diagram>& diagrams, EquivalenceMode mode, int workers = 1);

// Outer: subset replaced by a super-node carrying the boundary ports.
// Inner: subset plus one node standing for the rest of the system.
std::pair<SystemArchitecture, SystemArchitecture> condense(const SystemArchitecture& arch,
                                                           const std::set<std::string>& subset);

enum class Generator { Exhaustive, Circular };
std::string to_string(Generator g);
Generator parse_generator(std::string_view text);

struct PipelineOptions {
    Generator generator = Generator::Exhaustive;
    int workers = 1;
    bool cap_pair_crossings = false;
    std::size_t limit_diagrams = 0;  // 0 = unlimited
    std::optional<std::vector<std::string>> circular_order;
};

// Shadows for k = 0..k_max, resolved and classified in the architecture's mode.
ClassReport pipeline(const SystemArchitecture& arch, int k_max, const PipelineOptions& opts = {});

std::string report_to_json(const ClassReport& report);
std::string report_to_csv(const ClassReport& report);

// Graphviz rendering of a diagram's shadow; crossings appear as small
// annotated nodes.
std::string to_dot(const Diagram& d, const std::string& name);

}  // namespace sgt
