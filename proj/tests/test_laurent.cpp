#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sgt/laurent.hpp"

using sgt::LaurentPoly;

namespace {

const LaurentPoly B = LaurentPoly::B();

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), exp(-6, 6), coeff(-9, 9);
    LaurentPoly p;
    for (int i = nterms(rng); i > 0; --i) p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("laurent: addition") {
    CHECK(B + LaurentPoly{{1, -1}, {0, -2}, {-1, -1}} == LaurentPoly(-1));
    CHECK(B + LaurentPoly() == B);
    CHECK((B + B).to_string() == "2*A + 2 + 2*A^-1");
}

TEST_CASE("laurent: multiplication") {
    CHECK((B * B).to_string() == "A^2 + 2*A + 3 + 2*A^-1 + A^-2");
    CHECK(B * LaurentPoly(1) == B);
    CHECK(B - B * B == -LaurentPoly{{0, 2}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}});
}

TEST_CASE("laurent: monomial shifts and degree") {
    CHECK(sgt::mul_monomial(B - B * B, -1, 1).to_string() == "A^3 + A^2 + 2*A + 1 + A^-1");
    CHECK(sgt::mul_monomial(B, 1, 0) == B);
    CHECK(sgt::mul_monomial(LaurentPoly(1), 1, 2).to_string() == "A^2");
    CHECK(sgt::mul_monomial(B, 0, 4).is_zero());
    CHECK(sgt::min_degree(B) == -1);
    CHECK(sgt::min_degree(LaurentPoly::parse("A^3 + A^2 + 2*A + 1 + A^-1")) == -1);
    CHECK_THROWS_AS(sgt::min_degree(LaurentPoly()), std::domain_error);
}

TEST_CASE("laurent: text format round trip") {
    for (const char* s : {"0", "1", "-1", "A", "-A", "A^-1", "-2*A^-3", "A^3 + A^2 + 2*A + 1 + A^-1",
                          "-A^2 - A - 2 - A^-1 - A^-2", "A^6 - A^2 - 1 - A^-2 - A^-3 - A^-4 - A^-5 - A^-6"})
        CHECK(LaurentPoly::parse(s).to_string() == s);
    CHECK(LaurentPoly::parse(" 2 *A^2-A+A ") == LaurentPoly::monomial(2, 2));
    CHECK_THROWS(LaurentPoly::parse(""));
    CHECK_THROWS(LaurentPoly::parse("A^"));
    CHECK_THROWS(LaurentPoly::parse("2A"));
    CHECK_THROWS(LaurentPoly::parse("x"));
}

TEST_CASE("laurent: overflow is detected") {
    LaurentPoly big = LaurentPoly::monomial(INT64_MAX, 0);
    CHECK_THROWS_AS(big + LaurentPoly(1), std::overflow_error);
    CHECK_THROWS_AS(big * LaurentPoly(2), std::overflow_error);
    CHECK_THROWS_AS(big.mul_monomial(-2, 0), std::overflow_error);
}

TEST_CASE("laurent: ring axioms on random inputs") {
    std::mt19937 rng(20240611);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == LaurentPoly());
        if (!p.is_zero()) {
            int n = static_cast<int>(rng() % 11) - 5;
            CHECK(sgt::min_degree(sgt::mul_monomial(p, 3, n)) == sgt::min_degree(p) + n);
        }
        int k = static_cast<int>(rng() % 4);
        LaurentPoly s = p;
        for (int j = 0; j < 2 * k; ++j) s = sgt::mul_monomial(s, -1, 1);
        CHECK(s == sgt::mul_monomial(p, 1, 2 * k));
        CHECK(p.mirror().mirror() == p);
        CHECK((p * q).mirror() == p.mirror() * q.mirror());
    }
}
