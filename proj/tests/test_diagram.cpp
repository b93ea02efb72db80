#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "support.hpp"
#include "sgt/diagram.hpp"
#include "sgt/errors.hpp"
#include "sgt/yamada.hpp"

using namespace sgt;

namespace {

Diagram k5() {
    // edge (i,j) gets label 10*i+j
    Diagram d;
    for (int i = 1; i <= 5; ++i) {
        Vertex v{i, {}};
        for (int j = 1; j <= 5; ++j)
            if (j != i) v.arcs.push_back(10 * std::min(i, j) + std::max(i, j));
        d.vertices.push_back(v);
    }
    return d;
}

}  // namespace

TEST_CASE("pd: parse basics") {
    Diagram t = parse_pd("V1[a,b,c] V2[c,b,a]");
    CHECK(t.vertices.size() == 2);
    CHECK(t.crossing_number() == 0);
    CHECK_THROWS_AS(parse_pd("V1[a,b,c] V2[c,b,b]"), InputError);
    CHECK_THROWS_AS(parse_pd("X1[a,b,c]"), InputError);
    CHECK_THROWS_AS(parse_pd("V1[1,2"), InputError);
    CHECK_THROWS_AS(parse_pd("Q1[1,1]"), InputError);
    CHECK_THROWS_AS(parse_pd("V1[1,2] V1[1,2]"), InputError);
}

TEST_CASE("pd: comments and empty input") {
    Diagram d = parse_pd("# theta\nV1[1,2,3]  # first\nV2[3,2,1]\n");
    CHECK(d == fixtures::theta());
    Diagram e = parse_pd("");
    CHECK(e.empty());
    CHECK(emit_pd(e).empty());
}

TEST_CASE("pd: emit then parse round-trips") {
    for (const Diagram& d : {fixtures::theta(), fixtures::twisted_theta(), fixtures::hopf_handcuff(),
                             fixtures::clasped_theta(), fixtures::k4()}) {
        CHECK(parse_pd(emit_pd(d)) == d);
    }
    CHECK(emit_pd(fixtures::twisted_theta()) == "V1[4,1,0]\nV2[4,3,2]\nX1[0,1,2,3]\n");
}

TEST_CASE("smoothing: each state drops one crossing") {
    Diagram d = fixtures::clasped_theta();
    for (Smoothing s : {Smoothing::Plus, Smoothing::Minus, Smoothing::Zero}) {
        Diagram e = smooth_crossing(d, 2, s);
        validate(e);
        CHECK(e.crossing_number() == 2);
    }
    CHECK(smooth_crossing(d, 1, Smoothing::Zero).vertices.size() == 3);
    CHECK_THROWS_AS(smooth_crossing(d, 9, Smoothing::Plus), std::invalid_argument);
}

TEST_CASE("smoothing: the plus state of the twisted theta has an isthmus") {
    Diagram plus = smooth_crossing(fixtures::twisted_theta(), 1, Smoothing::Plus);
    CHECK(plus.crossing_number() == 0);
    AbstractGraph g = underlying_graph(plus);
    bool isthmus = false;
    for (const GraphEdge& e : g.edges()) isthmus = isthmus || g.is_cut_edge(e.id);
    CHECK(isthmus);
    CHECK(yamada(plus).is_zero());
}

TEST_CASE("planarity: small cases") {
    CHECK(is_planar(fixtures::theta()));
    CHECK(is_planar(fixtures::k4()));
    CHECK(is_planar(fixtures::clasped_theta()));
    CHECK_FALSE(is_planar(k5()));
    // theta with one vertex's order reversed embeds on the torus
    CHECK_FALSE(is_planar(parse_pd("V1[1,2,3] V2[1,2,3]")));
    CHECK(genus_oracle(parse_pd("V1[1,2,3] V2[1,2,3]")) == 1);
    CHECK(genus_oracle(parse_pd("V1[]")) == 0);
    CHECK_THROWS_AS(genus_oracle(parse_pd("V1[] V2[]")), InputError);
}

TEST_CASE("planarity: contraction agrees with the Euler genus on random rotation systems") {
    std::mt19937 rng(7);
    int planar = 0;
    for (int i = 0; i < 1000; ++i) {
        Diagram d = support::random_rotation_system(rng, 1 + static_cast<int>(rng() % 10));
        bool euler = genus_oracle(d) == 0;
        REQUIRE(is_planar(d) == euler);
        planar += euler;
    }
    CHECK(planar > 50);
    CHECK(planar < 950);
}

TEST_CASE("planarity ignores over/under markings") {
    for (const Diagram& d : support::corpus()) {
        CHECK(is_planar(d) == is_planar(mirror(d)));
    }
}

TEST_CASE("mirror: involution and exponent negation") {
    for (const Diagram& d : {fixtures::twisted_theta(), fixtures::hopf_handcuff(), fixtures::clasped_theta()}) {
        CHECK(isomorphic(mirror(mirror(d)), d));
        CHECK(canonical_form(mirror(d)) != canonical_form(d));
        CHECK(yamada(mirror(d)) == yamada(d).mirror());
    }
}

TEST_CASE("canonical form: relabelling invariance") {
    Diagram d = fixtures::clasped_theta();
    Diagram r = parse_pd("V7[80,10,20] V3[80,70,60] X5[40,11,50,10] X2[11,40,60,30] X9[20,50,30,70]");
    CHECK(isomorphic(d, r));
    CHECK(canonical_form(d) == canonical_form(r));
    CHECK_FALSE(isomorphic(d, mirror(d)));
    CHECK(isomorphic(d, mirror(d), {.shadow = true}));
    // rotating a vertex's listing is not a change of diagram
    Diagram rot = parse_pd("V1[0,2,8] V2[8,7,6] X1[4,1,5,0] X2[1,4,6,3] X3[2,5,3,7]");
    CHECK(isomorphic(d, rot));
    CHECK_FALSE(isomorphic(d, rot, {.keep_vertex_ids = true, .anchor_vertices = true}));
}

TEST_CASE("canonical form: reversed vertex orders are different maps") {
    CHECK_FALSE(isomorphic(fixtures::theta(), parse_pd("V1[1,2,3] V2[1,2,3]")));
}

TEST_CASE("views: components and incidence") {
    Diagram d = parse_pd("V1[1,2,3] V2[3,2,1] V3[4,4]");
    DiagramView view(d);
    CHECK(view.components().size() == 2);
    Port p{0, 0};
    CHECK(view.other_end(p).node == 1);
    CHECK(view.other_end(view.other_end(p)) == p);
}
