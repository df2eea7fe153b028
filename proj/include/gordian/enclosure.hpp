#pragma once

// Certified rational enclosures of pi and of x = 2cos(2 pi theta) for rational
// theta. Every bound is exact rational arithmetic rounded outward to a dyadic
// grid, so results are rigorous.

#include <gordian/numeric.hpp>

#include <map>
#include <mutex>
#include <utility>

namespace gordian {

struct RationalInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool overlaps(const RationalInterval& o) const { return !(hi < o.lo || o.hi < lo); }
    Rational width() const { return hi - lo; }
};

namespace detail {

inline Rational round_down(const Rational& q, unsigned bits) {
    Integer scale = Integer(1) << bits;
    return Rational(floor(q * Rational(scale)), scale);
}

inline Rational round_up(const Rational& q, unsigned bits) {
    Integer scale = Integer(1) << bits;
    return Rational(ceil(q * Rational(scale)), scale);
}

/// atan(1/k) for integer k >= 2 by its alternating series; the partial sums
/// bracket the value because the terms decrease.
inline RationalInterval atan_inverse(unsigned k, unsigned bits) {
    const Rational eps(Integer(1), Integer(1) << (bits + 4));
    const Rational k2 = Rational(k) * Rational(k);
    Rational power = Rational(1, k);
    Rational sum = 0;
    for (unsigned n = 0;; ++n) {
        Rational term = power / Rational(2 * n + 1);
        Rational next = sum + (n % 2 == 0 ? term : Rational(-term));
        if (term < eps) {
            Rational a = std::min(sum, next);
            Rational b = std::max(sum, next);
            return {round_down(a, bits + 2), round_up(b, bits + 2)};
        }
        sum = next;
        power /= k2;
    }
}

/// cos(y) for 0 <= y < 3. From the second term on the series terms decrease,
/// so consecutive partial sums bracket the value.
inline RationalInterval cos_series(const Rational& y, unsigned bits) {
    const Rational eps(Integer(1), Integer(1) << (bits + 4));
    const Rational y2 = y * y;
    Rational term = 1;
    Rational sum = 1;
    for (unsigned k = 1;; ++k) {
        term = term * y2 / Rational((2 * k - 1) * (2 * k));
        Rational next = k % 2 == 1 ? sum - term : sum + term;
        if (k >= 2 && term < eps) {
            Rational a = std::min(sum, next);
            Rational b = std::max(sum, next);
            return {round_down(a, bits + 2), round_up(b, bits + 2)};
        }
        sum = next;
    }
}

}  // namespace detail

/// pi to within about 2^-bits, via Machin's formula. Memoized per precision.
inline RationalInterval pi_enclosure(unsigned bits) {
    static std::mutex mu;
    static std::map<unsigned, RationalInterval> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(bits); it != cache.end()) return it->second;
    }
    const auto a = detail::atan_inverse(5, bits + 6);
    const auto b = detail::atan_inverse(239, bits + 6);
    RationalInterval pi{16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
    pi = {detail::round_down(pi.lo, bits + 2), detail::round_up(pi.hi, bits + 2)};
    std::lock_guard lock(mu);
    cache.emplace(bits, pi);
    return pi;
}

/// Encloses 2cos(2 pi theta); the width shrinks roughly like 2^-bits.
inline RationalInterval cos_turn_enclosure(const Rational& theta, unsigned bits) {
    Rational t = theta - Rational(floor(theta));
    if (t > Rational(1, 2)) t = 1 - t;
    bool negate = false;
    if (t > Rational(1, 4)) {
        t = Rational(1, 2) - t;
        negate = true;
    }
    if (t == 0) return negate ? RationalInterval{-2, -2} : RationalInterval{2, 2};
    if (t == Rational(1, 4)) return {0, 0};
    // angle = 2 pi t lies in (0, pi/2), where cos is decreasing.
    const auto pi = pi_enclosure(bits + 4);
    const Rational angle_lo = detail::round_down(2 * t * pi.lo, bits + 6);
    const Rational angle_hi = detail::round_up(2 * t * pi.hi, bits + 6);
    const auto c_hi = detail::cos_series(angle_lo, bits + 2);
    const auto c_lo = detail::cos_series(angle_hi, bits + 2);
    RationalInterval x{2 * c_lo.lo, 2 * c_hi.hi};
    if (x.hi > 2) x.hi = 2;
    if (negate) x = {-x.hi, -x.lo};
    return x;
}

}  // namespace gordian
