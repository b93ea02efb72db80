#pragma once

#include <string>
#include <vector>

#include "sgt/diagram.hpp"
#include "sgt/yamada.hpp"

namespace sgt {

enum class MoveKind {
    R1Add,      // curl on an arc
    R1Remove,   // drop a crossing with a kink
    R2Add,      // push one arc over another across a face
    R2Remove,   // cancel a bigon
    R3,         // slide a strand over a triangle
    R4,         // slide a strand across a vertex
    R5Flip,     // flip a vertex disk, twisting its edges (changes R by a unit)
    R5Unflip,
    R5Spin,     // full turn of a vertex disk with framing compensation
    R5Unspin,
    R6Add,      // exchange two adjacent edges at a vertex
    R6Remove,
};

std::string to_string(MoveKind kind);

// A directed arc, named by the slot it leaves.
struct DartRef {
    bool at_crossing = false;
    int id = 0;
    int slot = 0;
    bool operator==(const DartRef&) const = default;
};

// Site of a move. Fields used per kind:
//   R1Add    a (arc, leaving end), variant 0..3 (kink side x sign)
//   R1Remove crossing
//   R2Add    a, b (both with the common face on their left), variant 1 = a passes over
//   R2Remove crossing, crossing2
//   R3       a (any arc of the triangle face, face on its left)
//   R4       vertex, slot (first edge of the run), count (run length);
//            count 0 means a new crossing-free run: a names the arc to pull
//            across and variant 1 makes it pass over
//   R5*      vertex, variant = twist sign
//   R6Add    vertex, slot (exchanges slot and slot+1), variant = sign
//   R6Remove crossing, vertex
struct MoveSpec {
    MoveKind kind = MoveKind::R1Add;
    int vertex = 0;
    int crossing = 0;
    int crossing2 = 0;
    DartRef a, b;
    int slot = 0;
    int count = 0;
    int variant = 0;
    std::string describe() const;
};

// R6 changes a vertex's cyclic order (pliable only); R1 changes the framing
// (not ribbon). R5Flip/Unflip also change the framing, so ribbon diagrams
// use the framed full turn R5Spin/Unspin instead.
bool move_allowed(MoveKind kind, EquivalenceMode mode);

// Applies the move; MoveError when illegal for the mode or when the site does
// not match the move's local picture. The result is validated, and a planar
// input yields a planar output.
Diagram apply_move(const Diagram& d, const MoveSpec& m, EquivalenceMode mode);

// Sites that match each kind's coarse shape; apply_move may still reject some.
std::vector<MoveSpec> candidate_moves(const Diagram& d, EquivalenceMode mode, const std::vector<MoveKind>& kinds = {});

// Every applicable move of the given kinds (all kinds legal in `mode` if empty).
std::vector<MoveSpec> legal_moves(const Diagram& d, EquivalenceMode mode, const std::vector<MoveKind>& kinds = {});

}  // namespace sgt
