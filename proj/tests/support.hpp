#pragma once

// Seeded generators and independent reference computations shared by the
// test binaries.

#include <gordian/gordian.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace gordian::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))]; }

    /// Random turn angle k/den with den in [1, max_den].
    TurnAngle turn(long max_den = 60) {
        const long den = uniform(1, max_den);
        return TurnAngle(Rational(uniform(0, den - 1), den));
    }

    std::vector<Integer> basis(std::size_t max_len, long range) {
        const auto len = static_cast<std::size_t>(uniform(0, static_cast<long>(max_len)));
        std::vector<Integer> a;
        for (std::size_t i = 0; i < len; ++i) a.emplace_back(uniform(-range, range));
        return a;
    }

    /// Symmetric with d(1) = 1, built coefficient by coefficient.
    LaurentPoly normalized(long max_degree, long range) {
        const long n = uniform(0, max_degree);
        LaurentPoly::Map c;
        Integer rest = 1;
        for (long i = 1; i <= n; ++i) {
            const Integer v = uniform(-range, range);
            c[i] = v;
            c[-i] = v;
            rest -= 2 * v;
        }
        c[0] = rest;
        return LaurentPoly(c);
    }

    /// Random formal knot over small generators.
    FormalKnot knot(std::size_t max_gens = 4, long max_p = 31) {
        FormalKnot k;
        const long n = uniform(0, static_cast<long>(max_gens));
        for (long i = 0; i < n; ++i) {
            const long p = 2 * uniform(1, (max_p - 1) / 2) + 1;
            k = connected_sum(k, FormalKnot::generator(p, coin()));
        }
        return k;
    }

    ArcSet arcs(std::size_t max_arcs = 4, long max_den = 12) {
        if (uniform(0, 19) == 0) return ArcSet::full();
        std::vector<Arc> v;
        const long n = uniform(0, static_cast<long>(max_arcs));
        for (long i = 0; i < n; ++i) {
            TurnAngle a = turn(max_den);
            TurnAngle b = turn(max_den);
            if (a == b) continue;
            v.push_back({a, b});
        }
        return ArcSet::from_arcs(v);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// 1 + a_0 (2 - t - t^-1) + sum a_i (t^i + t^-i)(2 - t - t^-1), written out
/// coefficient by coefficient.
inline LaurentPoly expand_basis(const std::vector<Integer>& a) {
    LaurentPoly::Map c{{0, 1}};
    if (!a.empty()) {
        c[0] += 2 * a[0];
        c[1] -= a[0];
        c[-1] -= a[0];
    }
    for (std::size_t idx = 1; idx < a.size(); ++idx) {
        const auto i = static_cast<LaurentPoly::Exponent>(idx);
        for (int s : {1, -1}) {
            c[s * i] += 2 * a[idx];
            c[s * (i + 1)] -= a[idx];
            c[s * (i - 1)] -= a[idx];
        }
    }
    return LaurentPoly(c);
}

/// Solves expand_basis(a) = d by reading coefficients off from the top:
/// only a_i reaches t^{i+1}, with coefficient -1.
inline std::vector<Integer> solve_basis(const LaurentPoly& d) {
    LaurentPoly rest = d - LaurentPoly::one();
    if (rest.is_zero()) return {};
    std::vector<Integer> a(static_cast<std::size_t>(std::max<LaurentPoly::Exponent>(rest.max_exponent(), 1)));
    for (auto i = static_cast<long>(a.size()) - 1; i >= 0; --i) {
        std::vector<Integer> unit(a.size());
        unit[static_cast<std::size_t>(i)] = 1;
        a[static_cast<std::size_t>(i)] = -rest.coeff(i + 1);
        rest -= a[static_cast<std::size_t>(i)] * (expand_basis(unit) - LaurentPoly::one());
    }
    if (!rest.is_zero()) a.clear();
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

/// D_p by long division of t^p + 1 by t + 1, then centred.
inline LaurentPoly torus_by_division(long p) {
    std::vector<long> num(static_cast<std::size_t>(p) + 1, 0);
    num[0] = 1;
    num[static_cast<std::size_t>(p)] = 1;
    std::vector<long> quo(static_cast<std::size_t>(p), 0);
    for (long i = p; i >= 1; --i) {
        const long q = num[static_cast<std::size_t>(i)];
        quo[static_cast<std::size_t>(i - 1)] = q;
        num[static_cast<std::size_t>(i)] -= q;
        num[static_cast<std::size_t>(i - 1)] -= q;
    }
    LaurentPoly::Map c;
    for (long i = 0; i < p; ++i) c[i - (p - 1) / 2] = quo[static_cast<std::size_t>(i)];
    return LaurentPoly(c);
}

/// Q(t + 1/t) as a Laurent polynomial, by Horner.
inline LaurentPoly substitute(const IntPoly& q) {
    const LaurentPoly x = LaurentPoly::t() + LaurentPoly::monomial(1, -1);
    LaurentPoly out;
    for (long i = q.degree(); i >= 0; --i) out = out * x + LaurentPoly::constant(q.coeff(static_cast<std::size_t>(i)));
    return out;
}

/// Real value of the symmetric d at e^{2 pi i theta}, in floating point.
inline double eval_on_circle(const LaurentPoly& d, double theta) {
    double s = 0;
    for (const auto& [e, v] : d.coeffs()) {
        const double k = static_cast<double>(v);
        s += k * std::cos(2 * std::numbers::pi * static_cast<double>(e) * theta);
    }
    return s;
}

inline double to_double(const Rational& q) { return static_cast<double>(q); }

/// Sorted circle roots (2k+1)/(2p) of the D_p, theta = 1/2 excluded.
inline std::vector<Rational> known_roots(const std::vector<long>& ps) {
    std::vector<Rational> out;
    for (long p : ps) {
        for (long k = 0; k < p; ++k) {
            Rational r(2 * k + 1, 2 * p);
            if (r != Rational(1, 2)) out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Minimal circular gap of a sorted list of turns.
inline Rational circular_gap(const std::vector<Rational>& r) {
    if (r.size() < 2) return 1;
    Rational best = r.front() + 1 - r.back();
    for (std::size_t i = 0; i + 1 < r.size(); ++i) best = std::min(best, r[i + 1] - r[i]);
    return best;
}

/// True when some interval contains the whole enclosure, and no other interval touches it.
inline bool brackets_uniquely(const std::vector<IsolatingInterval>& ivs, const RationalInterval& e, std::size_t& index) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        const auto& iv = ivs[i];
        const bool inside = iv.exact() ? e.contains(iv.lo) : (iv.lo < e.lo && e.hi < iv.hi);
        const bool touches = !(e.hi < iv.lo || iv.hi < e.lo);
        if (inside) {
            ++hits;
            index = i;
        } else if (touches) {
            return false;
        }
    }
    return hits == 1;
}

}  // namespace gordian::testing
