#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgt/abstract_graph.hpp"

namespace sgt {

using Label = int;

// Flat vertex: arc labels in counterclockwise order. Any valence, including
// zero (an isolated point) and two (a subdivision point or, as V[l,l], a
// free circle).
struct Vertex {
    int id = 0;
    std::vector<Label> arcs;
    bool operator==(const Vertex&) const = default;
};

// Crossing: four labels counterclockwise; slots 0,2 carry the under strand,
// slots 1,3 the over strand.
struct Crossing {
    int id = 0;
    std::array<Label, 4> arcs{};
    bool operator==(const Crossing&) const = default;
};

// A spatial graph diagram as a labelled combinatorial map. Every label
// occurs in exactly two slots; the two slots are the ends of one arc.
struct Diagram {
    std::vector<Vertex> vertices;
    std::vector<Crossing> crossings;

    int crossing_number() const { return static_cast<int>(crossings.size()); }
    bool empty() const { return vertices.empty() && crossings.empty(); }
    int max_valence() const;
    int next_vertex_id() const;
    int next_crossing_id() const;
    Label next_label() const;
    // Sorts vertices and crossings by id.
    void sort_by_id();
    bool operator==(const Diagram&) const = default;
};

// Map-vertex index: vertices come first, then crossings.
struct Port {
    int node = 0;
    int slot = 0;
    bool operator==(const Port&) const = default;
};

// Read-only incidence structure over a valid diagram.
class DiagramView {
public:
    explicit DiagramView(const Diagram& d);

    const Diagram& diagram() const { return *d_; }
    int node_count() const { return static_cast<int>(offset_.size()) - 1; }
    int vertex_count() const { return static_cast<int>(d_->vertices.size()); }
    bool is_crossing(int node) const { return node >= vertex_count(); }
    int degree(int node) const { return offset_[node + 1] - offset_[node]; }
    int dart(Port p) const { return offset_[p.node] + p.slot; }
    int dart_count() const { return offset_.back(); }
    Port port(int dart) const;
    Label label(Port p) const;
    Port other_end(Port p) const { return port(partner_[dart(p)]); }
    int partner(int dart) const { return partner_[dart]; }
    int node_of_vertex(int id) const;    // -1 if absent
    int node_of_crossing(int id) const;  // -1 if absent
    int node_id(int node) const;
    // Slot s + k modulo the degree of the node.
    Port rotate(Port p, int k) const;

    // Connected components as lists of nodes (sorted).
    std::vector<std::vector<int>> components() const;

private:
    const Diagram* d_;
    std::vector<int> offset_;
    std::vector<int> node_of_dart_;
    std::vector<int> partner_;
};

// Throws InputError describing the first violated structural invariant.
void validate(const Diagram& d);

// PD text: `V<id>[l1,...,lk]` and `X<id>[l1,l2,l3,l4]`, whitespace
// separated, `#` starts a comment. Non-integer labels are numbered in order of
// first appearance. Throws InputError.
Diagram parse_pd(std::string_view text);
// One item per line, vertices then crossings, ascending ids.
std::string emit_pd(const Diagram& d);

enum class Smoothing { Plus, Minus, Zero };

// Spin +1 (Plus, weight A) joins slots 0-1 and 2-3; spin -1 (Minus, weight
// A^-1) joins 1-2 and 3-0; spin 0 turns the crossing into a 4-valent vertex.
Diagram smooth_crossing(const Diagram& d, int crossing_id, Smoothing kind);

// Removes map-vertex `node` and connects its slots in the given pairs. Arcs
// that close up without touching another map-vertex become free circles,
// represented as new vertices V[l,l].
Diagram splice_out(const Diagram& d, int node, const std::vector<std::pair<int, int>>& pairs);

// Planarity by contraction of the rotation system (crossings and vertices
// treated alike, over/under ignored).
bool is_planar(const Diagram& d);
// Genus of each connected component by face tracing (Euler characteristic).
std::vector<int> component_genera(const Diagram& d);
// Genus of a connected diagram; InputError if disconnected.
int genus_oracle(const Diagram& d);

// Faces as cyclic sequences of departing ports: the successor of the arc
// leaving `p` is the arc leaving slot (q - 1) at the arrival port q.
std::vector<std::vector<Port>> faces(const Diagram& d);

// Swaps every crossing's over/under marking.
Diagram mirror(const Diagram& d);

struct CanonicalOptions {
    bool keep_vertex_ids = false;  // vertex ids are part of the identity
    bool anchor_vertices = false;  // vertex rotations start at slot 0 (needs keep_vertex_ids)
    bool shadow = false;           // forget over/under markings
};

// Relabelled copy that is identical for isomorphic inputs: ids and labels
// renumbered by a minimal traversal.
Diagram canonical_form(const Diagram& d, CanonicalOptions opts = {});
std::string canonical_code(const Diagram& d, CanonicalOptions opts = {});
bool isomorphic(const Diagram& a, const Diagram& b, CanonicalOptions opts = {});

// Abstract graph of a crossing-free diagram: one vertex per diagram vertex,
// one edge per arc. InputError if crossings remain.
AbstractGraph underlying_graph(const Diagram& d);

}  // namespace sgt
