#pragma once

// Sparse integer Laurent polynomials, the torus polynomials D_p, and the
// basis in which every normalized polynomial has a unique expansion
//
//   d = 1 + a_0 (2 - t - t^-1) + sum_{i>=1} a_i (t^i + t^-i)(2 - t - t^-1).

#include <gordian/detail/terms.hpp>
#include <gordian/numeric.hpp>
#include <gordian/polynomial.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gordian {

class LaurentPoly {
public:
    using Exponent = std::int64_t;
    using Map = std::map<Exponent, Integer>;

    LaurentPoly() = default;
    explicit LaurentPoly(Map coeffs) : c_(std::move(coeffs)) { prune(); }

    static LaurentPoly constant(const Integer& v) { return LaurentPoly(Map{{0, v}}); }
    static LaurentPoly monomial(const Integer& v, Exponent e) { return LaurentPoly(Map{{e, v}}); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly t() { return monomial(1, 1); }

    const Map& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Integer coeff(Exponent e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Integer(0) : it->second;
    }
    /// Highest and lowest exponents; undefined for zero.
    Exponent max_exponent() const { return c_.rbegin()->first; }
    Exponent min_exponent() const { return c_.begin()->first; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly operator-() const {
        Map r = c_;
        for (auto& [e, v] : r) v = -v;
        return LaurentPoly(std::move(r));
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) c_[e] += v;
        prune();
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        Map r;
        for (const auto& [ea, va] : a.c_) {
            for (const auto& [eb, vb] : b.c_) r[ea + eb] += va * vb;
        }
        return LaurentPoly(std::move(r));
    }
    friend LaurentPoly operator*(const Integer& k, const LaurentPoly& a) { return constant(k) * a; }

    /// t -> t^-1
    LaurentPoly involution() const {
        Map r;
        for (const auto& [e, v] : c_) r.emplace(-e, v);
        return LaurentPoly(std::move(r));
    }

    LaurentPoly shifted(Exponent by) const {
        Map r;
        for (const auto& [e, v] : c_) r.emplace(e + by, v);
        return LaurentPoly(std::move(r));
    }

    Integer eval_at_one() const {
        Integer s = 0;
        for (const auto& [e, v] : c_) s += v;
        return s;
    }

    bool is_symmetric() const { return *this == involution(); }

    std::string to_string() const {
        std::vector<detail::Term> terms;
        for (const auto& [e, v] : c_) terms.push_back({e, Rational(v)});
        return detail::format_terms(terms, 't');
    }

    static LaurentPoly parse(std::string_view text) {
        Map c;
        for (const auto& [e, coef] : detail::parse_terms(text, 't')) {
            if (!is_integer(coef)) throw ParseError("non-integer coefficient in Laurent polynomial");
            c[e] += numer(coef);
        }
        return LaurentPoly(std::move(c));
    }

private:
    void prune() {
        for (auto it = c_.begin(); it != c_.end();) {
            it = it->second == 0 ? c_.erase(it) : std::next(it);
        }
    }

    Map c_;
};

/// Expansion coefficients a_0, ..., a_n; trailing zeros are trimmed.
class BasisCoeffs {
public:
    BasisCoeffs() = default;
    explicit BasisCoeffs(std::vector<Integer> a) : a_(std::move(a)) {
        while (!a_.empty() && a_.back() == 0) a_.pop_back();
    }
    const std::vector<Integer>& values() const { return a_; }
    std::size_t size() const { return a_.size(); }
    bool empty() const { return a_.empty(); }
    const Integer& operator[](std::size_t i) const { return a_[i]; }
    friend bool operator==(const BasisCoeffs&, const BasisCoeffs&) = default;

    /// Comma separated, e.g. `-1,1`; the empty string is the empty sequence.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i) out += ',';
            out += a_[i].str();
        }
        return out;
    }
    static BasisCoeffs parse(std::string_view text) {
        std::vector<Integer> a;
        std::size_t start = 0;
        if (text.empty()) return {};
        while (true) {
            auto comma = text.find(',', start);
            a.push_back(parse_integer(text.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return BasisCoeffs(std::move(a));
    }

private:
    std::vector<Integer> a_;
};

/// Laurent polynomial with coefficients in (1/2)Z, stored as doubled integers.
class HalfLaurent {
public:
    HalfLaurent() = default;
    /// Builds value / 2.
    static HalfLaurent halves(const LaurentPoly& doubled) {
        HalfLaurent h;
        h.twice_ = doubled;
        return h;
    }
    static HalfLaurent from_integral(const LaurentPoly& p) { return halves(Integer(2) * p); }

    const LaurentPoly& doubled() const { return twice_; }
    Rational coeff(LaurentPoly::Exponent e) const { return Rational(twice_.coeff(e), 2); }
    friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

    std::string to_string() const {
        std::vector<detail::Term> terms;
        for (const auto& [e, v] : twice_.coeffs()) terms.push_back({e, Rational(v, 2)});
        return detail::format_terms(terms, 't');
    }
    static HalfLaurent parse(std::string_view text) {
        LaurentPoly::Map c;
        for (const auto& [e, coef] : detail::parse_terms(text, 't')) {
            Rational twice = coef * 2;
            if (!is_integer(twice)) throw ParseError("coefficient is not a multiple of 1/2");
            c[e] += numer(twice);
        }
        return halves(LaurentPoly(std::move(c)));
    }

private:
    LaurentPoly twice_;
};

inline bool is_normalized(const LaurentPoly& d) { return d.is_symmetric() && d.eval_at_one() == 1; }

/// The representative of +-t^k d that is normalized.
inline LaurentPoly normalize(const LaurentPoly& d) {
    if (d.is_zero()) throw DomainError("the zero polynomial cannot be normalized");
    const auto span = d.min_exponent() + d.max_exponent();
    if (span % 2 != 0) throw DomainError("polynomial has no symmetric representative: " + d.to_string());
    LaurentPoly s = d.shifted(-span / 2);
    const Integer at_one = s.eval_at_one();
    if (at_one == -1) s = -s;
    else if (at_one != 1) throw DomainError("d(1) = " + at_one.str() + ", expected +-1");
    if (!s.is_symmetric()) throw DomainError("polynomial has no symmetric representative: " + d.to_string());
    return s;
}

/// D_p(t) = t^{-(p-1)/2} (t^p + 1)/(t + 1) = sum_{j=0}^{p-1} (-1)^j t^{j-(p-1)/2}.
inline LaurentPoly torus_poly(const Integer& p) {
    if (p % 2 == 0) throw DomainError("p must be odd");
    if (p < 3) throw DomainError("p must be at least 3");
    if (p > materialization_limit()) throw DomainError("p = " + p.str() + " exceeds the materialization guard");
    const auto n = static_cast<LaurentPoly::Exponent>(p);
    const LaurentPoly::Exponent half = (n - 1) / 2;
    LaurentPoly::Map c;
    for (LaurentPoly::Exponent j = 0; j < n; ++j) c.emplace(j - half, j % 2 == 0 ? 1 : -1);
    return LaurentPoly(std::move(c));
}

namespace detail {

/// (t^i + t^-i)(2 - t - t^-1) for i >= 1, and 2 - t - t^-1 for i == 0.
inline LaurentPoly basis_element(std::size_t i) {
    const LaurentPoly bump(LaurentPoly::Map{{-1, -1}, {0, 2}, {1, -1}});
    if (i == 0) return bump;
    const auto e = static_cast<LaurentPoly::Exponent>(i);
    return LaurentPoly(LaurentPoly::Map{{-e, 1}, {e, 1}}) * bump;
}

/// (1 - t) for i == 0 scaled by 2 (the bracket carries a_0/2 times 2(1-t)),
/// and (t^i + t^-i)(1 - t) for i >= 1.
inline LaurentPoly linking_element(std::size_t i) {
    const LaurentPoly one_minus_t(LaurentPoly::Map{{0, 1}, {1, -1}});
    if (i == 0) return one_minus_t;
    const auto e = static_cast<LaurentPoly::Exponent>(i);
    return LaurentPoly(LaurentPoly::Map{{-e, 1}, {e, 1}}) * one_minus_t;
}

}  // namespace detail

inline LaurentPoly from_basis(const BasisCoeffs& a) {
    LaurentPoly d = LaurentPoly::one();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) d += a[i] * detail::basis_element(i);
    }
    return d;
}

/// Unique expansion of a normalized polynomial. The element indexed i has top
/// term -t^{i+1}, so the top coefficient of the remainder fixes one a_i at a time.
inline BasisCoeffs to_basis(const LaurentPoly& d) {
    if (!is_normalized(d)) throw DomainError("polynomial is not normalized: " + d.to_string());
    LaurentPoly rest = d;
    if (rest.max_exponent() <= 0) return {};
    std::vector<Integer> a(static_cast<std::size_t>(rest.max_exponent()));
    while (rest.max_exponent() > 0) {
        const auto i = static_cast<std::size_t>(rest.max_exponent() - 1);
        const Integer ai = -rest.coeff(rest.max_exponent());
        a[i] = ai;
        rest -= ai * detail::basis_element(i);
    }
    if (rest != LaurentPoly::one()) throw DomainError("basis elimination left a non-unit remainder");
    return BasisCoeffs(std::move(a));
}

/// 1/2 + a_0 (1 - t) + sum_{i>=1} a_i (t^i + t^-i)(1 - t).
inline HalfLaurent linking_form(const BasisCoeffs& a) {
    LaurentPoly twice = LaurentPoly::one();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) twice += (2 * a[i]) * detail::linking_element(i);
    }
    return HalfLaurent::halves(twice);
}

/// f(t) + f(t^-1); rejects results with a half-integer coefficient.
inline LaurentPoly symmetrize(const HalfLaurent& f) {
    LaurentPoly twice = f.doubled() + f.doubled().involution();
    LaurentPoly::Map out;
    for (const auto& [e, v] : twice.coeffs()) {
        if (v % 2 != 0) throw DomainError("symmetrization has a non-integral coefficient at t^" + std::to_string(e));
        out.emplace(e, v / 2);
    }
    return LaurentPoly(std::move(out));
}

/// Q with Q(z + 1/z) = d(z), via t^i + t^-i = V_i(x), V_0 = 2, V_1 = x,
/// V_{i+1} = x V_i - V_{i-1}.
inline IntPoly to_chebyshev(const LaurentPoly& d) {
    if (!d.is_symmetric()) throw DomainError("polynomial is not symmetric under t -> 1/t");
    if (d.is_zero()) return {};
    const auto top = static_cast<std::size_t>(d.max_exponent());
    IntPoly q = IntPoly::constant(d.coeff(0));
    IntPoly prev = IntPoly::constant(2);
    IntPoly cur = IntPoly::x();
    for (std::size_t i = 1; i <= top; ++i) {
        const Integer ci = d.coeff(static_cast<LaurentPoly::Exponent>(i));
        if (ci != 0) q = q + ci * cur;
        IntPoly next = IntPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return q;
}

/// Exact quotient a / b when b divides a in Z[t, t^-1] and b has unit leading
/// coefficient; std::nullopt otherwise.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly{};
    const Integer lb = b.coeff(b.max_exponent());
    if (lb != 1 && lb != -1) return std::nullopt;
    LaurentPoly rest = a;
    LaurentPoly::Map q;
    const auto db = b.max_exponent() - b.min_exponent();
    while (!rest.is_zero() && rest.max_exponent() - rest.min_exponent() >= db) {
        const auto shift = rest.max_exponent() - b.max_exponent();
        const Integer coef = rest.coeff(rest.max_exponent()) * lb;
        q[shift] += coef;
        rest -= LaurentPoly::monomial(coef, shift) * b;
    }
    if (!rest.is_zero()) return std::nullopt;
    return LaurentPoly(std::move(q));
}

/// If d is a product of torus polynomials D_p, the multiset of p in
/// descending order. The largest p with D_p | d is always a factor, since
/// the cyclotomic factor Phi_{2p} of D_p appears in no D_q with q < p.
inline std::optional<std::vector<Integer>> torus_factors(const LaurentPoly& d) {
    if (d.is_zero() || !d.is_symmetric()) return std::nullopt;
    std::vector<Integer> out;
    LaurentPoly rest = d;
    while (rest != LaurentPoly::one()) {
        if (rest.max_exponent() <= 0) return std::nullopt;
        bool found = false;
        for (Integer p = 2 * Integer(rest.max_exponent()) + 1; p >= 3; p -= 2) {
            if (auto q = divide_exact(rest, torus_poly(p))) {
                out.push_back(p);
                rest = std::move(*q);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return out;
}

}  // namespace gordian
