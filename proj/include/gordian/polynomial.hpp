#pragma once

// Dense univariate integer polynomials. Used for the Chebyshev image Q(x) of
// a symmetric Laurent polynomial and for Sturm sequences.

#include <gordian/detail/terms.hpp>
#include <gordian/numeric.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gordian {

class IntPoly {
public:
    IntPoly() = default;
    /// Coefficients in ascending degree order; trailing zeros are trimmed.
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(const Integer& v) { return IntPoly({v}); }
    static IntPoly monomial(const Integer& v, std::size_t degree) {
        std::vector<Integer> c(degree + 1);
        c[degree] = v;
        return IntPoly(std::move(c));
    }
    static IntPoly x() { return IntPoly({0, 1}); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Integer& lead() const { return c_.back(); }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const Integer& k, const IntPoly& a) {
        std::vector<Integer> r = a.c_;
        for (auto& v : r) v *= k;
        return IntPoly(std::move(r));
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Integer> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return IntPoly(std::move(r));
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    Integer content() const {
        Integer g = 0;
        for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
        return boost::multiprecision::abs(g);
    }

    /// Divides out the content; the sign of every value is preserved.
    IntPoly primitive() const {
        Integer g = content();
        if (g <= 1) return *this;
        std::vector<Integer> r = c_;
        for (auto& v : r) v /= g;
        return IntPoly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    /// Sign of the value at x, computed on the cleared-denominator form.
    int sign_at(const Rational& x) const {
        if (c_.empty()) return 0;
        const Integer n = numer(x);
        const Integer d = denom(x);
        Integer acc = 0;
        Integer dpow = 1;
        // Horner on the homogenised form sum c_i n^i d^(deg-i).
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * n + *it * dpow;
            dpow *= d;
        }
        return gordian::sign(acc);
    }

    std::string to_string() const {
        std::vector<detail::Term> terms;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] != 0) terms.push_back({static_cast<std::int64_t>(i), Rational(c_[i])});
        }
        return detail::format_terms(terms, 'x');
    }

    static IntPoly parse(std::string_view text) {
        std::vector<Integer> c;
        for (const auto& [e, coef] : detail::parse_terms(text, 'x')) {
            if (e < 0) throw ParseError("negative exponent in polynomial in x");
            if (!is_integer(coef)) throw ParseError("non-integer coefficient in polynomial in x");
            if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1);
            c[static_cast<std::size_t>(e)] += numer(coef);
        }
        return IntPoly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

/// A positive multiple of the remainder of a by b (b nonzero), so that signs
/// of the remainder are preserved for Sturm chains.
inline IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Integer> r = a.coeffs();
    const long db = b.degree();
    const Integer lb = b.lead();
    const Integer scale = boost::multiprecision::abs(lb);
    const int lb_sign = gordian::sign(lb);
    while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
        const long dr = static_cast<long>(r.size()) - 1;
        const Integer lr = r.back();
        // r <- |lb| r - sign(lb) lr x^(dr-db) b
        for (auto& v : r) v *= scale;
        for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + dr - db)] -= lb_sign * lr * b.coeffs()[static_cast<std::size_t>(i)];
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<long>(r.size()) - 1 >= dr) throw DomainError("pseudo-remainder failed to reduce degree");
    }
    return IntPoly(std::move(r)).primitive();
}

/// Exact quotient a / b over the rationals, scaled to a primitive integer
/// polynomial with positive leading coefficient. Throws unless b divides a.
inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
    const long db = b.degree();
    const long da = a.degree();
    if (da < db) {
        if (a.is_zero()) return {};
        throw DomainError("polynomial does not divide");
    }
    std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
    for (long k = da - db; k >= 0; --k) {
        Rational coef = r[static_cast<std::size_t>(k + db)] / Rational(b.lead());
        q[static_cast<std::size_t>(k)] = coef;
        for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= coef * Rational(b.coeffs()[static_cast<std::size_t>(i)]);
    }
    for (const auto& v : r) {
        if (v != 0) throw DomainError("polynomial does not divide");
    }
    Integer l = 1;
    for (const auto& v : q) l = boost::multiprecision::lcm(l, denom(v));
    std::vector<Integer> qi;
    qi.reserve(q.size());
    for (const auto& v : q) qi.push_back(numer(v * Rational(l)));
    IntPoly out = IntPoly(std::move(qi)).primitive();
    if (!out.is_zero() && out.lead() < 0) out = -out;
    return out;
}

/// Primitive gcd with positive leading coefficient.
inline IntPoly gcd(IntPoly a, IntPoly b) {
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        IntPoly r = positive_pseudo_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.lead() < 0) a = -a;
    if (a.degree() == 0) return IntPoly::constant(1);
    return a;
}

/// Product of the distinct irreducible factors: same roots, all simple.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : IntPoly::constant(1);
    IntPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) {
        IntPoly out = p.primitive();
        return out.lead() < 0 ? -out : out;
    }
    return exact_quotient(p, g);
}

}  // namespace gordian
