#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgt {

// Integer Laurent polynomial in A. Terms are kept sorted by ascending
// exponent and never carry a zero coefficient; arithmetic is exact and throws
// std::overflow_error instead of wrapping.
class LaurentPoly {
public:
    using Coeff = std::int64_t;
    struct Term {
        int exp;
        Coeff coeff;
        bool operator==(const Term&) const = default;
    };

    LaurentPoly() = default;
    LaurentPoly(Coeff c);  // NOLINT: constants convert implicitly
    LaurentPoly(std::initializer_list<Term> terms);

    static LaurentPoly monomial(Coeff c, int exp);
    static LaurentPoly A() { return monomial(1, 1); }
    static LaurentPoly B();  // A + 1 + A^-1

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    Coeff coeff(int exp) const;
    int min_degree() const;  // std::domain_error on zero
    int max_degree() const;

    LaurentPoly mul_monomial(Coeff c, int n) const;
    LaurentPoly mirror() const;  // A -> A^-1
    LaurentPoly pow(unsigned n) const;

    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }
    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    LaurentPoly operator-() const { return mul_monomial(-1, 0); }
    bool operator==(const LaurentPoly&) const = default;
    // Total order (exponent-major) for use as a map key.
    bool operator<(const LaurentPoly& q) const;

    // "A^3 + A^2 + 2*A + 1 + A^-1"; zero renders as "0".
    std::string to_string() const;
    static LaurentPoly parse(std::string_view text);  // std::invalid_argument

private:
    std::vector<Term> terms_;
    void normalize();
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul_monomial(const LaurentPoly& p, LaurentPoly::Coeff c, int n);
int min_degree(const LaurentPoly& p);

}  // namespace sgt
