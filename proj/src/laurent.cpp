#include "sgt/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sgt {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

int checked_exp(long long e) {
    if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min())
        throw std::overflow_error("Laurent exponent overflow");
    return static_cast<int>(e);
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff c) {
    if (c != 0) terms_.push_back({0, c});
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms) : terms_(terms) { normalize(); }

LaurentPoly LaurentPoly::monomial(Coeff c, int exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({exp, c});
    return p;
}

LaurentPoly LaurentPoly::B() { return LaurentPoly{{-1, 1}, {0, 1}, {1, 1}}; }

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coeff = checked_add(out.back().coeff, t.coeff);
        else
            out.push_back(t);
        if (out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

LaurentPoly::Coeff LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.exp < e; });
    return (it != terms_.end() && it->exp == exp) ? it->coeff : 0;
}

int LaurentPoly::min_degree() const {
    if (terms_.empty()) throw std::domain_error("undefined degree of the zero polynomial");
    return terms_.front().exp;
}

int LaurentPoly::max_degree() const {
    if (terms_.empty()) throw std::domain_error("undefined degree of the zero polynomial");
    return terms_.back().exp;
}

LaurentPoly LaurentPoly::mul_monomial(Coeff c, int n) const {
    LaurentPoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        r.terms_.push_back({checked_exp(static_cast<long long>(t.exp) + n), checked_mul(t.coeff, c)});
    return r;
}

LaurentPoly LaurentPoly::mirror() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.push_back({checked_exp(-static_cast<long long>(it->exp)), it->coeff});
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result(1), base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < q.terms_.size()) {
        if (j == q.terms_.size() || (i < terms_.size() && terms_[i].exp < q.terms_[j].exp)) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || q.terms_[j].exp < terms_[i].exp) {
            out.push_back(q.terms_[j++]);
        } else {
            Coeff c = checked_add(terms_[i].coeff, q.terms_[j].coeff);
            if (c != 0) out.push_back({terms_[i].exp, c});
            ++i, ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) { return *this += q.mul_monomial(-1, 0); }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r;
    if (p.is_zero() || q.is_zero()) return r;
    long long lo = static_cast<long long>(p.min_degree()) + q.min_degree();
    long long hi = static_cast<long long>(p.max_degree()) + q.max_degree();
    checked_exp(lo);
    checked_exp(hi);
    if (hi - lo < 4096) {
        std::vector<Coeff> dense(static_cast<std::size_t>(hi - lo + 1), 0);
        for (const auto& a : p.terms_)
            for (const auto& b : q.terms_) {
                Coeff& slot = dense[static_cast<std::size_t>(a.exp + b.exp - lo)];
                slot = checked_add(slot, checked_mul(a.coeff, b.coeff));
            }
        for (std::size_t k = 0; k < dense.size(); ++k)
            if (dense[k] != 0) r.terms_.push_back({static_cast<int>(lo + static_cast<long long>(k)), dense[k]});
        return r;
    }
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_) r.terms_.push_back({a.exp + b.exp, checked_mul(a.coeff, b.coeff)});
    r.normalize();
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& q) const {
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), q.terms_.begin(), q.terms_.end(),
        [](const Term& a, const Term& b) { return a.exp != b.exp ? a.exp < b.exp : a.coeff < b.coeff; });
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Coeff c = it->coeff;
        // magnitude printed separately; INT64_MIN cannot be negated
        bool neg = c < 0;
        std::string mag = std::to_string(c);
        if (neg) mag.erase(0, 1);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (it->exp == 0) {
            os << mag;
            continue;
        }
        if (mag != "1") os << mag << '*';
        os << 'A';
        if (it->exp != 1) os << '^' << it->exp;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    std::size_t i = 0;
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("bad polynomial '") + std::string(text) + "': " + what);
    };
    auto read_int = [&](long long& out) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) return false;
        try {
            out = std::stoll(s.substr(start, i - start));
        } catch (const std::out_of_range&) {
            fail("number out of range");
        }
        return true;
    };
    std::vector<Term> terms;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        long long c = 1;
        bool has_coeff = read_int(c);
        int exp = 0;
        if (has_coeff && i < s.size() && s[i] == 'A') fail("expected '*' between coefficient and 'A'");
        if (i < s.size() && s[i] == '*') {
            if (!has_coeff) fail("'*' without coefficient");
            ++i;
            if (i >= s.size() || s[i] != 'A') fail("expected 'A' after '*'");
        }
        if (i < s.size() && s[i] == 'A') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int esign = 1;
                if (i < s.size() && s[i] == '-') {
                    esign = -1;
                    ++i;
                }
                long long e = 0;
                if (!read_int(e)) fail("missing exponent");
                exp = checked_exp(esign * e);
            }
        } else if (!has_coeff) {
            fail("expected term");
        }
        terms.push_back({exp, sign * static_cast<Coeff>(c)});
    }
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly mul_monomial(const LaurentPoly& p, LaurentPoly::Coeff c, int n) { return p.mul_monomial(c, n); }
int min_degree(const LaurentPoly& p) { return p.min_degree(); }

}  // namespace sgt
