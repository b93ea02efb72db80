#include <doctest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "support.hpp"
#include "sgt/moves.hpp"
#include "sgt/yamada.hpp"

using namespace sgt;

namespace {

const EquivalenceMode kModes[] = {EquivalenceMode::Pliable, EquivalenceMode::Flat, EquivalenceMode::Ribbon};

std::vector<Diagram> seeds() {
    return {fixtures::theta(),         fixtures::twisted_theta(),  fixtures::hopf_handcuff(),
            fixtures::clasped_theta(), fixtures::doubled_square(), fixtures::k4()};
}

// R(after) = c * A^n * R(before) for a unit c * A^n.
bool differs_by_unit(const LaurentPoly& before, const LaurentPoly& after) {
    if (before.is_zero() || after.is_zero()) return before.is_zero() && after.is_zero();
    int shift = after.min_degree() - before.min_degree();
    for (int sign : {1, -1})
        if (before.mul_monomial(sign, shift) == after) return true;
    return false;
}

}  // namespace

TEST_CASE("moves: legality per mode") {
    CHECK(move_allowed(MoveKind::R1Add, EquivalenceMode::Pliable));
    CHECK(move_allowed(MoveKind::R1Add, EquivalenceMode::Flat));
    CHECK_FALSE(move_allowed(MoveKind::R1Add, EquivalenceMode::Ribbon));
    CHECK(move_allowed(MoveKind::R6Add, EquivalenceMode::Pliable));
    CHECK_FALSE(move_allowed(MoveKind::R6Add, EquivalenceMode::Flat));
    CHECK_FALSE(move_allowed(MoveKind::R6Remove, EquivalenceMode::Ribbon));
    CHECK_FALSE(move_allowed(MoveKind::R5Flip, EquivalenceMode::Ribbon));
    for (EquivalenceMode m : kModes) {
        CHECK(move_allowed(MoveKind::R2Add, m));
        CHECK(move_allowed(MoveKind::R3, m));
        CHECK(move_allowed(MoveKind::R4, m));
        CHECK(move_allowed(MoveKind::R5Spin, m));
    }
    MoveSpec r1{.kind = MoveKind::R1Add};
    CHECK_THROWS_AS(apply_move(fixtures::theta(), r1, EquivalenceMode::Ribbon), MoveError);
    MoveSpec r6{.kind = MoveKind::R6Add, .vertex = 1};
    CHECK_THROWS_AS(apply_move(fixtures::theta(), r6, EquivalenceMode::Flat), MoveError);
    MoveSpec bad{.kind = MoveKind::R1Remove, .crossing = 1};
    CHECK_THROWS_AS(apply_move(fixtures::theta(), bad, EquivalenceMode::Pliable), MoveError);
}

TEST_CASE("moves: every kind has sites on the seeds and respects planarity") {
    std::map<MoveKind, int> seen;
    for (const Diagram& d : seeds())
        for (EquivalenceMode mode : kModes)
            for (const MoveSpec& m : legal_moves(d, mode)) {
                Diagram e = apply_move(d, m, mode);
                CHECK(is_planar(e));
                ++seen[m.kind];
            }
    for (MoveKind k : support::all_kinds()) {
        if (k == MoveKind::R1Remove || k == MoveKind::R2Remove || k == MoveKind::R5Unflip ||
            k == MoveKind::R5Unspin || k == MoveKind::R6Remove || k == MoveKind::R3)
            continue;  // need prepared sites; covered by the walks below
        CAPTURE(to_string(k));
        CHECK(seen[k] > 0);
    }
}

TEST_CASE("moves: framing changes are units, the others are exact") {
    std::mt19937 rng(11);
    for (const Diagram& d : seeds())
        for (EquivalenceMode mode : kModes)
            for (const MoveSpec& m : legal_moves(d, mode)) {
                if (rng() % 4) continue;
                LaurentPoly before = yamada(d), after = yamada(apply_move(d, m, mode));
                CAPTURE(m.describe());
                switch (m.kind) {
                    case MoveKind::R1Add:
                    case MoveKind::R1Remove:
                    case MoveKind::R5Flip:
                    case MoveKind::R5Unflip:
                    case MoveKind::R6Add:
                    case MoveKind::R6Remove:
                        CHECK(differs_by_unit(before, after));
                        CHECK(equivalent(before, after, mode));
                        break;
                    default:
                        CHECK(before == after);
                }
            }
}

TEST_CASE("moves: random walks keep the canonical Yamada polynomial") {
    std::mt19937 rng(2024);
    for (EquivalenceMode mode : kModes) {
        int walks = 0, steps = 0;
        for (int w = 0; w < 40; ++w) {
            auto base = seeds();
            Diagram d = base[rng() % base.size()];
            LaurentPoly r = yamada(d);
            for (int s = 0; s < 5; ++s) {
                auto step = support::random_move(d, mode, rng, 7);
                if (!step) break;
                d = step->result;
                ++steps;
                CAPTURE(step->move.describe());
                if (mode == EquivalenceMode::Ribbon)
                    REQUIRE(yamada(d) == r);
                else
                    REQUIRE(equivalent(yamada(d), r, mode));
            }
            ++walks;
        }
        CHECK(walks == 40);
        CHECK(steps > 150);
    }
}

TEST_CASE("moves: each move is undone by a move of the inverse kind") {
    std::mt19937 rng(99);
    std::map<MoveKind, int> checked;
    for (EquivalenceMode mode : kModes)
        for (int t = 0; t < 60; ++t) {
            auto base = seeds();
            Diagram d = base[rng() % base.size()];
            auto step = support::random_move(d, mode, rng, 4);
            if (!step) continue;
            MoveKind inv = support::inverse(step->move.kind);
            bool found = false;
            for (const MoveSpec& m : legal_moves(step->result, mode, {inv}))
                if (isomorphic(apply_move(step->result, m, mode), d)) {
                    found = true;
                    break;
                }
            CAPTURE(step->move.describe());
            CHECK(found);
            ++checked[step->move.kind];
        }
    CHECK(checked.size() >= 6);
}

TEST_CASE("moves: R5 spin is exact, R5 flip is a unit") {
    for (const Diagram& d : {fixtures::theta(), fixtures::doubled_square()})
        for (int sign : {0, 1}) {
            MoveSpec spin{.kind = MoveKind::R5Spin, .vertex = 1, .variant = sign};
            CHECK(yamada(apply_move(d, spin, EquivalenceMode::Ribbon)) == yamada(d));
            MoveSpec flip{.kind = MoveKind::R5Flip, .vertex = 1, .variant = sign};
            LaurentPoly f = yamada(apply_move(d, flip, EquivalenceMode::Flat));
            CHECK(f == yamada(d).mul_monomial(-1, sign ? -3 : 3));
        }
}
