#pragma once

// Integer step functions on the circle (signature functions), their algebra
// and sup-distance, circle-root isolation for symmetric Laurent polynomials,
// and the minimal gap between consecutive circle roots.
//
// A breakpoint is either an exact rational turn or an algebraic turn: a root
// x of a square-free integer polynomial, isolated in (-2, 2), together with
// the half circle it lies on (theta = arccos(x/2) / 2pi or 1 minus that).

#include <gordian/circle.hpp>
#include <gordian/cyclotomic.hpp>
#include <gordian/enclosure.hpp>
#include <gordian/laurent.hpp>
#include <gordian/sturm.hpp>

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gordian {

struct AlgebraicTurn {
    IntPoly poly;  // square-free, primitive
    IsolatingInterval x;
    bool upper = true;  // theta in (0, 1/2)

    friend bool operator==(const AlgebraicTurn&, const AlgebraicTurn&) = default;
};

class Breakpoint {
public:
    Breakpoint(TurnAngle exact) : v_(std::move(exact)) {}  // NOLINT(google-explicit-constructor)
    Breakpoint(AlgebraicTurn alg) : v_(std::move(alg)) {}  // NOLINT(google-explicit-constructor)

    bool is_exact() const { return std::holds_alternative<TurnAngle>(v_); }
    const TurnAngle& exact() const { return std::get<TurnAngle>(v_); }
    const AlgebraicTurn& algebraic() const { return std::get<AlgebraicTurn>(v_); }

    /// Identity of representation, not of the point; use compare() for that.
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;

    /// Rational enclosure of the turn value.
    RationalInterval turn_enclosure(unsigned bits) const;

private:
    std::variant<TurnAngle, AlgebraicTurn> v_;
};

namespace detail {

// Quarter index: 0 for theta == 0, 1 for (0,1/2), 2 for 1/2, 3 for (1/2,1).
inline int half_index(const Breakpoint& b) {
    if (!b.is_exact()) return b.algebraic().upper ? 1 : 3;
    const Rational& v = b.exact().value();
    if (v == 0) return 0;
    if (v < Rational(1, 2)) return 1;
    if (v == Rational(1, 2)) return 2;
    return 3;
}

inline std::strong_ordering order_of(const Rational& a, const Rational& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// x-values of two algebraic turns (same polynomial family or not).
inline std::strong_ordering compare_x(AlgebraicTurn a, AlgebraicTurn b) {
    if (a.x.exact() && b.x.exact()) return order_of(a.x.lo, b.x.lo);
    if (a.x.exact() && b.poly.sign_at(a.x.lo) == 0 && b.x.contains(a.x.lo)) return std::strong_ordering::equal;
    if (b.x.exact() && a.poly.sign_at(b.x.lo) == 0 && a.x.contains(b.x.lo)) return std::strong_ordering::equal;
    if (!a.x.exact() && !b.x.exact()) {
        const IntPoly g = gcd(a.poly, b.poly);
        const Rational lo = std::max(a.x.lo, b.x.lo);
        const Rational hi = std::min(a.x.hi, b.x.hi);
        if (g.degree() >= 1 && lo < hi) {
            // Roots of g are roots of both; hi is an endpoint of one interval, hence not a root.
            if (SturmChain(g).count(lo, hi) > 0) return std::strong_ordering::equal;
        }
    }
    // Distinct points: bisect until the intervals separate.
    while (!(a.x.hi < b.x.lo || b.x.hi < a.x.lo)) {
        a.x.bisect(a.poly);
        b.x.bisect(b.poly);
        if (a.x.exact() && b.x.exact() && a.x.lo == b.x.lo) return std::strong_ordering::equal;
    }
    return a.x.hi < b.x.lo ? std::strong_ordering::less : std::strong_ordering::greater;
}

/// Exact x for turns whose cosine is rational (Niven); nullopt otherwise.
inline std::optional<Rational> niven_x(const Rational& theta) {
    const Integer d = denom(theta);
    if (d == 1) return Rational(2);
    if (d == 2) return Rational(-2);
    if (d == 3) return Rational(-1);
    if (d == 4) return Rational(0);
    if (d == 6) return Rational(1);
    return std::nullopt;
}

/// x-value of an exact turn against an algebraic one (same half).
inline std::strong_ordering compare_x(const TurnAngle& a, AlgebraicTurn b) {
    const Rational& th = a.value();
    if (auto nx = niven_x(th)) {
        AlgebraicTurn ax{IntPoly({-numer(*nx), denom(*nx)}), {*nx, *nx}, b.upper};
        return compare_x(ax, std::move(b));
    }
    const bool on_root = vanishes_at_rational_turn(b.poly, denom(th));
    for (unsigned bits = 32;; bits *= 2) {
        const auto enc = cos_turn_enclosure(th, bits);
        if (on_root && b.x.lo < enc.lo && enc.hi < b.x.hi) return std::strong_ordering::equal;
        if (enc.hi < b.x.lo) return std::strong_ordering::less;
        if (b.x.hi < enc.lo) return std::strong_ordering::greater;
        // Keep the isolating interval about as wide as the enclosure.
        while (b.x.width() > enc.width() && !b.x.exact()) b.x.bisect(b.poly);
        if (b.x.exact()) {
            if (enc.hi < b.x.lo) return std::strong_ordering::less;
            if (b.x.hi < enc.lo) return std::strong_ordering::greater;
        }
        if (bits > (1u << 16)) throw DomainError("could not separate breakpoints at " + a.to_string());
    }
}

inline std::strong_ordering reverse(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return std::strong_ordering::greater;
    if (o == std::strong_ordering::greater) return std::strong_ordering::less;
    return o;
}

}  // namespace detail

/// Exact circle order on [0, 1) turns.
inline std::strong_ordering compare(const Breakpoint& a, const Breakpoint& b) {
    const int ha = detail::half_index(a);
    const int hb = detail::half_index(b);
    if (ha != hb) return ha <=> hb;
    if (a.is_exact() && b.is_exact()) return a.exact() <=> b.exact();
    // Same open half; theta decreases with x on the upper half.
    std::strong_ordering by_x = std::strong_ordering::equal;
    if (!a.is_exact() && !b.is_exact()) {
        by_x = detail::compare_x(a.algebraic(), b.algebraic());
    } else if (a.is_exact()) {
        by_x = detail::compare_x(a.exact(), b.algebraic());
    } else {
        by_x = detail::reverse(detail::compare_x(b.exact(), a.algebraic()));
    }
    return ha == 1 ? detail::reverse(by_x) : by_x;
}

namespace detail {

/// Largest grid turn k/2^bits in [0, 1/2] certified to lie below theta(x),
/// where theta(x) = arccos(x/2)/(2 pi) decreases in x.
inline Rational turn_below(const Rational& x, unsigned bits) {
    if (x >= 2) return 0;
    const Integer scale = Integer(1) << bits;
    Integer lo = 0;           // certified: 2cos(2 pi lo/scale) > x
    Integer hi = scale / 2;   // not certified
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (cos_turn_enclosure(Rational(mid, scale), bits + 8).lo > x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return Rational(lo, scale);
}

/// Smallest grid turn certified to lie above theta(x).
inline Rational turn_above(const Rational& x, unsigned bits) {
    if (x <= -2) return Rational(1, 2);
    const Integer scale = Integer(1) << bits;
    Integer lo = 0;          // not certified
    Integer hi = scale / 2;  // certified: 2cos(2 pi hi/scale) < x  (or hi == 1/2 turn)
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (cos_turn_enclosure(Rational(mid, scale), bits + 8).hi < x) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return Rational(hi, scale);
}

}  // namespace detail

inline RationalInterval Breakpoint::turn_enclosure(unsigned bits) const {
    if (is_exact()) return {exact().value(), exact().value()};
    AlgebraicTurn a = algebraic();
    a.x.refine(a.poly, Rational(Integer(1), Integer(1) << bits));
    RationalInterval up{detail::turn_below(a.x.hi, bits), detail::turn_above(a.x.lo, bits)};
    if (a.upper) return up;
    return {1 - up.hi, 1 - up.lo};
}

/// Circle roots of a symmetric Laurent polynomial d, isolated in the
/// Chebyshev variable x = z + 1/z on [-2, 2].
struct RootIsolation {
    IntPoly q;           // to_chebyshev(d)
    IntPoly squarefree;  // same roots, simple
    std::vector<IsolatingInterval> intervals;  // increasing x
    std::vector<int> sign_pattern;             // sign of q on each gap, intervals.size() + 1 entries

    /// Each interior x-root is a conjugate pair z, 1/z on the circle.
    std::size_t circle_root_count() const {
        std::size_t n = 0;
        for (const auto& iv : intervals) n += (iv.exact() && (iv.lo == 2 || iv.lo == -2)) ? 1 : 2;
        return n;
    }

    void refine(const Rational& width) {
        for (auto& iv : intervals) iv.refine(squarefree, width);
    }
};

inline RootIsolation isolate_circle_roots(const LaurentPoly& d) {
    RootIsolation r;
    r.q = to_chebyshev(d);
    if (r.q.is_zero()) throw DomainError("cannot isolate the roots of the zero polynomial");
    r.squarefree = squarefree_part(r.q);
    r.intervals = isolate_real_roots(r.q, -2, 2);
    // Sample each gap at a non-root point.
    const auto& iv = r.intervals;
    auto gap_point = [&](std::size_t j) -> std::optional<Rational> {
        Rational left = j == 0 ? Rational(-2) : iv[j - 1].hi;
        Rational right = j == iv.size() ? Rational(2) : iv[j].lo;
        if (j > 0 && !iv[j - 1].exact()) return left;
        if (j < iv.size() && !iv[j].exact()) return right;
        if (left < right) return (left + right) / 2;
        return std::nullopt;
    };
    for (std::size_t j = 0; j <= iv.size(); ++j) {
        auto pt = gap_point(j);
        r.sign_pattern.push_back(pt ? r.q.sign_at(*pt) : 0);
    }
    return r;
}

/// Piecewise-constant integer function on the circle. values[i] holds on the
/// open arc (breakpoints[i], breakpoints[i+1]), the last arc wrapping through
/// 0. At a breakpoint the value is the average of the two sides.
class StepFun {
public:
    StepFun() : values_{0} {}
    static StepFun constant(const Integer& v) {
        StepFun f;
        f.values_ = {v};
        return f;
    }

    /// breakpoints must be strictly increasing in circle order; spurious
    /// breakpoints (equal values on both sides) are dropped.
    StepFun(std::vector<Breakpoint> breakpoints, std::vector<Integer> values) {
        if (breakpoints.empty()) {
            if (values.size() != 1) throw DomainError("a constant step function has exactly one value");
            values_ = std::move(values);
            return;
        }
        if (values.size() != breakpoints.size()) throw DomainError("step function needs one value per arc");
        for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
            if (compare(breakpoints[i], breakpoints[i + 1]) != std::strong_ordering::less) {
                throw DomainError("step function breakpoints must be strictly increasing");
            }
        }
        const std::size_t m = breakpoints.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (values[(i + m - 1) % m] != values[i]) {
                breaks_.push_back(std::move(breakpoints[i]));
                values_.push_back(values[i]);
            }
        }
        if (breaks_.empty()) values_ = {values[0]};
    }

    const std::vector<Breakpoint>& breakpoints() const { return breaks_; }
    const std::vector<Integer>& values() const { return values_; }
    bool is_constant() const { return breaks_.empty(); }

    friend bool operator==(const StepFun&, const StepFun&) = default;

    /// Value at theta; the two-sided average at a breakpoint.
    Rational value_at(const TurnAngle& theta) const {
        if (breaks_.empty()) return Rational(values_[0]);
        const Breakpoint probe(theta);
        const std::size_t m = breaks_.size();
        // First breakpoint not below theta.
        std::size_t j = 0;
        while (j < m && compare(breaks_[j], probe) == std::strong_ordering::less) ++j;
        if (j < m && compare(breaks_[j], probe) == std::strong_ordering::equal) {
            return Rational(values_[(j + m - 1) % m] + values_[j], 2);
        }
        return Rational(values_[j == 0 ? m - 1 : j - 1]);
    }

    /// Mirror image: the negated function.
    StepFun operator-() const {
        StepFun f = *this;
        for (auto& v : f.values_) v = -v;
        return f;
    }

    friend StepFun operator+(const StepFun& a, const StepFun& b) {
        auto merged = merge(a, b);
        std::vector<Breakpoint> pts;
        std::vector<Integer> vals;
        for (auto& piece : merged) {
            pts.push_back(std::move(piece.start));
            vals.push_back(piece.a + piece.b);
        }
        if (pts.empty()) return constant(a.values_[0] + b.values_[0]);
        return StepFun(std::move(pts), std::move(vals));
    }
    friend StepFun operator-(const StepFun& a, const StepFun& b) { return a + (-b); }

    /// Points where the function equals v, as an arc set (exact breakpoints only).
    ArcSet locus(const Integer& v) const {
        if (breaks_.empty()) return values_[0] == v ? ArcSet::full() : ArcSet::empty();
        std::vector<Arc> arcs;
        const std::size_t m = breaks_.size();
        for (std::size_t i = 0; i < m; ++i) {
            if (!breaks_[i].is_exact() || !breaks_[(i + 1) % m].is_exact()) {
                throw DomainError("locus needs exact breakpoints");
            }
            if (values_[i] == v) arcs.push_back({breaks_[i].exact(), breaks_[(i + 1) % m].exact()});
        }
        if (m == 1 && values_[0] == v) return ArcSet::full();
        return ArcSet::from_arcs(arcs);
    }

    /// One arc of the common refinement of two step functions.
    struct Piece {
        Breakpoint start;
        bool from_a, from_b;
        Integer a, b;  // values on the arc that starts here
        Integer a_before, b_before;
    };

    /// Common refinement; empty when both functions are constant.
    static std::vector<Piece> merge(const StepFun& f, const StepFun& g) {
        std::vector<Piece> out;
        const auto& fb = f.breaks_;
        const auto& gb = g.breaks_;
        std::size_t i = 0;
        std::size_t j = 0;
        std::size_t fi = fb.empty() ? 0 : fb.size() - 1;
        std::size_t gj = gb.empty() ? 0 : gb.size() - 1;
        while (i < fb.size() || j < gb.size()) {
            std::strong_ordering o = std::strong_ordering::equal;
            if (i == fb.size()) {
                o = std::strong_ordering::greater;
            } else if (j == gb.size()) {
                o = std::strong_ordering::less;
            } else {
                o = compare(fb[i], gb[j]);
            }
            const Integer fprev = f.values_[fi];
            const Integer gprev = g.values_[gj];
            Piece piece{o == std::strong_ordering::greater ? gb[j] : fb[i], false, false, 0, 0, fprev, gprev};
            if (o != std::strong_ordering::greater) {
                piece.from_a = true;
                fi = i++;
            }
            if (o != std::strong_ordering::less) {
                piece.from_b = true;
                gj = j++;
            }
            piece.a = f.values_[fi];
            piece.b = g.values_[gj];
            out.push_back(std::move(piece));
        }
        return out;
    }

private:
    std::vector<Breakpoint> breaks_;
    std::vector<Integer> values_;
};

/// Exact max over the circle of |f - g|, over every open arc of the common
/// refinement and every breakpoint (two-sided averages).
inline Integer sup_distance(const StepFun& f, const StepFun& g) {
    auto merged = StepFun::merge(f, g);
    if (merged.empty()) return boost::multiprecision::abs(f.values()[0] - g.values()[0]);
    Rational best = 0;
    for (const auto& piece : merged) {
        const Integer on_arc = boost::multiprecision::abs(piece.a - piece.b);
        best = std::max(best, Rational(on_arc));
        const Rational at_point = Rational(piece.a + piece.a_before - piece.b - piece.b_before, 2);
        best = std::max(best, at_point < 0 ? Rational(-at_point) : at_point);
    }
    return floor(best);
}

namespace detail {

/// Sorted distinct roots (2k+1)/(2p) as machine fractions; the guard keeps
/// 2p well inside 64 bits.
inline std::vector<std::pair<long, long>> torus_root_fractions(const std::vector<Integer>& ps) {
    std::vector<std::pair<long, long>> fr;
    for (const auto& p : ps) {
        if (p > materialization_limit()) throw DomainError("p = " + p.str() + " exceeds the materialization guard");
        if (p > Integer(1) << 40) throw DomainError("p = " + p.str() + " is too large to enumerate");
        const long n = static_cast<long>(p);
        for (long k = 0; k < n; ++k) {
            if (2 * k + 1 != n) fr.emplace_back(2 * k + 1, 2 * n);
        }
    }
    auto cross = [](const std::pair<long, long>& a, const std::pair<long, long>& b) {
        return static_cast<Wide>(a.first) * b.second - static_cast<Wide>(b.first) * a.second;
    };
    std::sort(fr.begin(), fr.end(), [&](const auto& a, const auto& b) { return cross(a, b) < 0; });
    fr.erase(std::unique(fr.begin(), fr.end(), [&](const auto& a, const auto& b) { return cross(a, b) == 0; }), fr.end());
    return fr;
}

/// Sorted distinct circle roots of a product of torus polynomials.
inline std::vector<TurnAngle> torus_roots(const std::vector<Integer>& ps) {
    std::vector<TurnAngle> roots;
    for (const auto& [num, den] : torus_root_fractions(ps)) roots.emplace_back(Rational(num, den));
    return roots;
}

inline int torus_product_sign(const std::vector<Integer>& ps, const TurnAngle& theta) {
    int s = 1;
    for (const auto& p : ps) s *= generator_sign_at(p, theta);
    return s;
}

/// Circle roots of d in circle order, exact where the cosine is rational.
inline std::vector<Breakpoint> circle_breakpoints(const RootIsolation& iso) {
    std::vector<Breakpoint> upper;
    std::vector<Breakpoint> lower;
    std::optional<Breakpoint> at_zero;
    std::optional<Breakpoint> at_half;
    for (auto it = iso.intervals.rbegin(); it != iso.intervals.rend(); ++it) {
        const auto& iv = *it;
        if (iv.exact()) {
            const Rational& x = iv.lo;
            if (x == 2) { at_zero = Breakpoint(TurnAngle()); continue; }
            if (x == -2) { at_half = Breakpoint(TurnAngle(1, 2)); continue; }
            if (x == 1 || x == 0 || x == -1) {
                const Rational th = x == 1 ? Rational(1, 6) : (x == 0 ? Rational(1, 4) : Rational(1, 3));
                upper.emplace_back(TurnAngle(th));
                lower.emplace_back(TurnAngle(1 - th));
                continue;
            }
        }
        upper.emplace_back(AlgebraicTurn{iso.squarefree, iv, true});
        lower.emplace_back(AlgebraicTurn{iso.squarefree, iv, false});
    }
    std::vector<Breakpoint> out;
    if (at_zero) out.push_back(*at_zero);
    out.insert(out.end(), upper.begin(), upper.end());
    if (at_half) out.push_back(*at_half);
    out.insert(out.end(), lower.rbegin(), lower.rend());
    return out;
}

}  // namespace detail

/// theta -> 1 - Sign(d(e^{2 pi i theta})), the positive-signature branch.
inline StepFun signature_of_poly(const LaurentPoly& d) {
    if (!is_normalized(d)) throw DomainError("polynomial is not normalized: " + d.to_string());
    const IntPoly q = to_chebyshev(d);
    const IntPoly g = gcd(q, q.derivative());
    if (g.degree() >= 1 && !isolate_real_roots(g, -2, 2).empty()) {
        throw DomainError("polynomial has a repeated root on the unit circle");
    }
    if (auto ps = torus_factors(d)) {
        auto roots = detail::torus_roots(*ps);
        if (roots.empty()) return StepFun::constant(0);
        std::vector<Breakpoint> pts;
        std::vector<Integer> vals;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const auto& next = roots[(i + 1) % roots.size()];
            Rational hi = next.value() <= roots[i].value() ? next.value() + 1 : next.value();
            TurnAngle mid((roots[i].value() + hi) / 2);
            pts.emplace_back(roots[i]);
            vals.emplace_back(1 - detail::torus_product_sign(*ps, mid));
        }
        return StepFun(std::move(pts), std::move(vals));
    }
    const RootIsolation iso = isolate_circle_roots(d);
    const std::size_t r = iso.intervals.size();
    if (r == 0) return StepFun::constant(1 - iso.sign_pattern[0]);
    std::vector<Integer> vals(2 * r);
    for (std::size_t i = 0; i < 2 * r; ++i) {
        const std::size_t gap = i < r ? r - 1 - i : i - r + 1;
        vals[i] = 1 - iso.sign_pattern[gap];
    }
    return StepFun(detail::circle_breakpoints(iso), std::move(vals));
}

/// Smallest turn distance between consecutive distinct circle roots: exact
/// when d is a product of torus polynomials, otherwise a certified lower
/// bound. Defined as one full turn with at most one root.
struct RootGap {
    Rational value;
    bool exact = true;
};

namespace detail {

inline RootGap gap_of_sorted(const std::vector<TurnAngle>& roots) {
    if (roots.size() <= 1) return {1, true};
    Rational best = roots.front().value() + 1 - roots.back().value();
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) best = std::min(best, roots[i + 1].value() - roots[i].value());
    return {best, true};
}

}  // namespace detail

inline RootGap min_root_gap(const LaurentPoly& d) {
    if (auto ps = torus_factors(d)) return detail::gap_of_sorted(detail::torus_roots(*ps));
    const RootIsolation iso = isolate_circle_roots(d);
    const auto pts = detail::circle_breakpoints(iso);
    if (pts.size() <= 1) return {1, true};
    bool all_exact = std::all_of(pts.begin(), pts.end(), [](const Breakpoint& b) { return b.is_exact(); });
    if (all_exact) {
        std::vector<TurnAngle> roots;
        for (const auto& b : pts) roots.push_back(b.exact());
        return detail::gap_of_sorted(roots);
    }
    for (unsigned bits = 16;; bits += 16) {
        std::vector<RationalInterval> enc;
        for (const auto& b : pts) enc.push_back(b.turn_enclosure(bits));
        Rational best = enc.front().lo + 1 - enc.back().hi;
        for (std::size_t i = 0; i + 1 < enc.size(); ++i) best = std::min(best, enc[i + 1].lo - enc[i].hi);
        if (best > 0) return {best, false};
        if (bits > 4096) throw DomainError("could not certify a positive root gap");
    }
}

}  // namespace gordian
