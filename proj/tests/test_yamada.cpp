#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "support.hpp"
#include "sgt/errors.hpp"
#include "sgt/moves.hpp"
#include "sgt/yamada.hpp"

using namespace sgt;

TEST_CASE("yamada: worked examples") {
    CHECK(yamada(fixtures::theta()).to_string() == "-A^2 - A - 2 - A^-1 - A^-2");
    CHECK(yamada(fixtures::twisted_theta()).to_string() == "A^3 + A^2 + 2*A + 1 + A^-1");
    CHECK(yamada(fixtures::hopf_handcuff()).to_string() == "A^4 + A^3 + A^2 + A - A^-2 - A^-3 - A^-4 - A^-5");
    CHECK(yamada(fixtures::clasped_theta()).to_string() == "A^6 - A^2 - 1 - A^-2 - A^-3 - A^-4 - A^-5 - A^-6");
}

TEST_CASE("yamada: state sum agrees on the worked examples") {
    for (const Diagram& d : {fixtures::theta(), fixtures::twisted_theta(), fixtures::hopf_handcuff(),
                             fixtures::clasped_theta(), fixtures::doubled_square(), fixtures::k4()})
        CHECK(yamada_statesum(d) == yamada(d));
}

TEST_CASE("yamada: state sum over three states of one crossing") {
    Diagram d = fixtures::twisted_theta();
    LaurentPoly sum = LaurentPoly::A() * yamada(smooth_crossing(d, 1, Smoothing::Plus)) +
                      LaurentPoly::monomial(1, -1) * yamada(smooth_crossing(d, 1, Smoothing::Minus)) +
                      yamada(smooth_crossing(d, 1, Smoothing::Zero));
    CHECK(sum == yamada(d));
    CHECK(yamada_statesum(fixtures::theta()) == h_polynomial(underlying_graph(fixtures::theta())));
    Diagram big;
    for (int i = 1; i <= 13; ++i) big.crossings.push_back({i, {4 * i, 4 * i + 1, 4 * i + 1, 4 * i}});
    CHECK_THROWS_AS(yamada_statesum(parse_pd(emit_pd(big))), std::invalid_argument);
}

TEST_CASE("yamada: disjoint unions multiply, wedges multiply with a sign") {
    LaurentPoly t = yamada(fixtures::theta());
    LaurentPoly h = yamada(fixtures::hopf_handcuff());
    CHECK(yamada(parse_pd("V1[0,4,6] V2[2,6,5] X1[2,1,3,0] X2[1,5,4,3] V3[11,12,13] V4[13,12,11]")) == h * t);
    CHECK(yamada(parse_pd("V1[1,2,3,11,12,13] V2[3,2,1] V3[13,12,11]")) == -(t * t));
}

TEST_CASE("yamada: derived relations") {
    const LaurentPoly B = LaurentPoly::B();
    LaurentPoly t = yamada(fixtures::theta());
    // a free circle
    CHECK(yamada(parse_pd("V1[1,1]")) == B);
    // a small loop attached at a vertex
    CHECK(yamada(parse_pd("V1[1,2,3,4,4] V2[3,2,1]")) == -B * t);
    // twisting two edges at a vertex: -A or -A^-1
    CHECK(yamada(fixtures::twisted_theta()) == t.mul_monomial(-1, 1));
    CHECK(yamada(mirror(fixtures::twisted_theta())) == t.mul_monomial(-1, -1));
    // a curl on an edge: A^2 or A^-2
    std::set<int> shifts;
    for (int variant = 0; variant < 4; ++variant) {
        MoveSpec m{.kind = MoveKind::R1Add, .a = {false, 1, 0}, .variant = variant};
        LaurentPoly r = yamada(apply_move(fixtures::theta(), m, EquivalenceMode::Pliable));
        bool up = r == t.mul_monomial(1, 2), down = r == t.mul_monomial(1, -2);
        CHECK((up || down));
        shifts.insert(up ? 2 : -2);
    }
    CHECK(shifts.size() == 2);
    // petals and concentric loops
    CHECK(yamada(parse_pd("V1[1,1,2,2]")) == -B * B);
    CHECK(yamada(parse_pd("V1[1,2,2,1]")) == -B * B);
    // edge subdivision
    CHECK(yamada(parse_pd("V1[1,2,3] V2[3,2,4] V3[4,1]")) == t);
}

TEST_CASE("yamada: crossing order does not matter") {
    std::mt19937 rng(17);
    auto corpus = support::corpus();
    for (std::size_t i = 0; i < corpus.size(); i += 9) {
        const Diagram& d = corpus[i];
        LaurentPoly want = yamada(d);
        for (int t = 0; t < 3; ++t) {
            auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
            CHECK(yamada(d, pick) == want);
        }
    }
}

TEST_CASE("yamada: corpus agrees with the state sum and mirrors") {
    auto corpus = support::corpus();
    CHECK(corpus.size() >= 50);
    for (const Diagram& d : corpus) {
        REQUIRE(d.crossing_number() <= 3);
        CHECK(yamada(d) == yamada_statesum(d));
        CHECK(yamada(mirror(d)) == yamada(d).mirror());
    }
}

TEST_CASE("canonicalize and equivalent") {
    LaurentPoly p = yamada(fixtures::clasped_theta());
    CHECK(canonicalize(p.mul_monomial(-1, 1), EquivalenceMode::Pliable) == canonicalize(p, EquivalenceMode::Pliable));
    CHECK(canonicalize(p.mul_monomial(1, 2), EquivalenceMode::Flat) == canonicalize(p, EquivalenceMode::Flat));
    CHECK(canonicalize(p, EquivalenceMode::Ribbon) == p);
    CHECK(canonicalize(LaurentPoly(), EquivalenceMode::Pliable).is_zero());
    CHECK(canonicalize(p, EquivalenceMode::Pliable).min_degree() == 0);
    LaurentPoly c1 = LaurentPoly::parse("A^-3 + A^-2 + 3*A^-1 + 2 + 3*A + A^2 + A^3");
    for (int n = 1; n <= 3; ++n)
        CHECK(canonicalize(c1 * LaurentPoly::monomial(n % 2 ? -1 : 1, n), EquivalenceMode::Pliable) ==
              canonicalize(c1, EquivalenceMode::Pliable));
    LaurentPoly t = yamada(fixtures::theta());
    CHECK(equivalent(yamada(fixtures::twisted_theta()), t, EquivalenceMode::Pliable));
    CHECK_FALSE(equivalent(yamada(fixtures::twisted_theta()), t, EquivalenceMode::Ribbon));
    for (EquivalenceMode m : {EquivalenceMode::Pliable, EquivalenceMode::Flat, EquivalenceMode::Ribbon}) {
        CHECK_FALSE(equivalent(t, p, m));
        CHECK(equivalent(p, p, m));
    }
    CHECK(parse_mode("ribbon") == EquivalenceMode::Ribbon);
    CHECK_THROWS_AS(parse_mode("rigid"), InputError);
}
