#pragma once

// Exact arithmetic on the circle R/Z, measured in turns. Arc sets are regular
// open sets (finite unions of open arcs modulo their endpoints), which keeps
// complement an involution and the boolean-algebra laws exact.

#include <gordian/numeric.hpp>

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gordian {

/// A rational point of the circle, reduced into [0, 1).
class TurnAngle {
public:
    TurnAngle() = default;
    explicit TurnAngle(const Rational& value) : v_(value - Rational(floor(value))) {}
    TurnAngle(long num, long den) : TurnAngle(Rational(num, den)) {}

    const Rational& value() const { return v_; }
    friend bool operator==(const TurnAngle&, const TurnAngle&) = default;
    friend std::strong_ordering operator<=>(const TurnAngle& a, const TurnAngle& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (b.v_ < a.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const { return fraction_string(v_); }
    static TurnAngle parse(std::string_view text) { return TurnAngle(parse_rational(text)); }

private:
    Rational v_ = 0;
};

/// Open arc travelled counterclockwise from lo to hi; wraps through 0 when hi < lo.
struct Arc {
    TurnAngle lo;
    TurnAngle hi;

    bool wraps() const { return hi < lo; }
    Rational length() const { return wraps() ? hi.value() + 1 - lo.value() : hi.value() - lo.value(); }
    TurnAngle midpoint() const { return TurnAngle(lo.value() + length() / 2); }
    bool contains(const TurnAngle& x) const {
        if (wraps()) return x > lo || x < hi;
        return lo < x && x < hi;
    }
    friend bool operator==(const Arc&, const Arc&) = default;
};

class ArcSet {
public:
    /// The empty set.
    ArcSet() = default;

    static ArcSet empty() { return {}; }
    static ArcSet full() {
        ArcSet s;
        s.full_ = true;
        return s;
    }

    /// Union of arbitrary (possibly overlapping or touching) open arcs.
    static ArcSet from_arcs(const std::vector<Arc>& arcs) {
        ArcSet acc;
        for (const auto& a : arcs) {
            if (a.lo == a.hi) throw DomainError("arc endpoints must differ");
            acc = acc.unite(single(a));
        }
        return acc;
    }

    bool is_full() const { return full_; }
    bool is_empty() const { return !full_ && bounds_.empty(); }

    /// Canonical arcs, ordered by lo; a wrapping arc (if any) comes last.
    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        const std::size_t m = bounds_.size();
        if (m == 0) return out;
        const std::size_t start = first_inside_ ? 0 : 1;
        for (std::size_t i = start; i < m; i += 2) out.push_back({bounds_[i], bounds_[(i + 1) % m]});
        return out;
    }

    /// Sorted boundary points of the set.
    const std::vector<TurnAngle>& boundary() const { return bounds_; }

    /// Membership of a point that is not a boundary point; boundary points
    /// are never members.
    bool contains(const TurnAngle& x) const {
        if (full_) return true;
        if (bounds_.empty()) return false;
        auto it = std::lower_bound(bounds_.begin(), bounds_.end(), x);
        if (it != bounds_.end() && *it == x) return false;
        // Elementary arc index: (bounds[j-1], bounds[j]) has index j-1, the
        // wrap arc has index m-1.
        const std::size_t j = static_cast<std::size_t>(it - bounds_.begin());
        const std::size_t m = bounds_.size();
        const std::size_t idx = j == 0 ? m - 1 : j - 1;
        return (idx % 2 == 0) == first_inside_;
    }

    Rational measure() const {
        if (full_) return 1;
        Rational total = 0;
        for (const auto& a : arcs()) total += a.length();
        return total;
    }

    /// Midpoint of the leftmost arc (smallest lo), or nothing when empty.
    /// The full circle yields 0.
    std::optional<TurnAngle> witness() const {
        if (full_) return TurnAngle();
        auto a = arcs();
        if (a.empty()) return std::nullopt;
        return a.front().midpoint();
    }

    ArcSet complement() const {
        ArcSet s = *this;
        if (bounds_.empty()) {
            s.full_ = !full_;
            return s;
        }
        s.first_inside_ = !first_inside_;
        return s;
    }

    ArcSet intersect(const ArcSet& o) const {
        return combine(o, [](bool a, bool b) { return a && b; });
    }
    ArcSet unite(const ArcSet& o) const {
        return combine(o, [](bool a, bool b) { return a || b; });
    }
    ArcSet minus(const ArcSet& o) const { return intersect(o.complement()); }

    friend bool operator==(const ArcSet&, const ArcSet&) = default;

    /// `[(lo,hi),...]`, `[]` for the empty set, `[full]` for the circle.
    std::string to_string() const {
        if (full_) return "[full]";
        std::string out = "[";
        bool first = true;
        for (const auto& a : arcs()) {
            if (!first) out += ',';
            first = false;
            out += "(" + a.lo.to_string() + "," + a.hi.to_string() + ")";
        }
        return out + "]";
    }

    static ArcSet parse(std::string_view text) {
        std::string s;
        for (char c : text) {
            if (c != ' ') s.push_back(c);
        }
        if (s == "[full]") return full();
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("arc set must be bracketed: " + s);
        std::vector<Arc> arcs;
        std::size_t i = 1;
        while (i < s.size() - 1) {
            if (s[i] == ',') {
                ++i;
                continue;
            }
            if (s[i] != '(') throw ParseError("expected '(' in arc set: " + s);
            auto close = s.find(')', i);
            auto comma = s.find(',', i);
            if (close == std::string::npos || comma == std::string::npos || comma > close) throw ParseError("malformed arc in: " + s);
            arcs.push_back({TurnAngle::parse(s.substr(i + 1, comma - i - 1)), TurnAngle::parse(s.substr(comma + 1, close - comma - 1))});
            i = close + 1;
        }
        return from_arcs(arcs);
    }

private:
    static ArcSet single(const Arc& a) {
        ArcSet s;
        if (a.lo < a.hi) {
            s.bounds_ = {a.lo, a.hi};
            s.first_inside_ = true;
        } else {
            s.bounds_ = {a.hi, a.lo};
            s.first_inside_ = false;
        }
        return s;
    }

    template <class Op>
    ArcSet combine(const ArcSet& o, Op op) const {
        std::vector<TurnAngle> merged;
        std::set_union(bounds_.begin(), bounds_.end(), o.bounds_.begin(), o.bounds_.end(), std::back_inserter(merged));
        if (merged.empty()) {
            ArcSet s;
            s.full_ = op(full_, o.full_);
            return s;
        }
        // Membership of each elementary arc (merged[i], merged[i+1]), wrap last.
        const std::size_t m = merged.size();
        std::vector<bool> inside(m);
        for (std::size_t i = 0; i < m; ++i) {
            const Arc piece{merged[i], merged[(i + 1) % m]};
            const TurnAngle probe = m == 1 ? TurnAngle(merged[0].value() + Rational(1, 2)) : piece.midpoint();
            inside[i] = op(contains(probe), o.contains(probe));
        }
        return canonical(merged, inside);
    }

    /// Drops boundary points with equal membership on both sides.
    static ArcSet canonical(const std::vector<TurnAngle>& pts, const std::vector<bool>& inside) {
        const std::size_t m = pts.size();
        ArcSet s;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < m; ++i) {
            const bool before = inside[(i + m - 1) % m];
            if (before != inside[i]) keep.push_back(i);
        }
        if (keep.empty()) {
            s.full_ = inside[0];
            return s;
        }
        for (auto i : keep) s.bounds_.push_back(pts[i]);
        s.first_inside_ = inside[keep[0]];
        return s;
    }

    std::vector<TurnAngle> bounds_;
    bool first_inside_ = true;
    bool full_ = false;
};

/// Sign of D_p at e^{2 pi i theta}, evaluated from the closed form
/// D_p(e^{i phi}) = cos(p phi / 2) / cos(phi / 2) without materializing D_p.
/// The point 1/2 is a removable zero of both factors and is not a root.
inline int generator_sign_at(const Integer& p, const TurnAngle& theta) {
    if (p % 2 == 0 || p < 3) throw DomainError("p must be an odd integer >= 3");
    const Rational& th = theta.value();
    const Rational half(1, 2);
    const Rational shifted = Rational(p) * th + half;
    if (is_integer(shifted) && th != half) return 0;
    Integer c = floor(shifted);
    if (th >= half) c -= 1;
    return c % 2 == 0 ? 1 : -1;
}

/// A_p: where D_p < 0 (the signature of K_p equals 2). Breakpoints are the
/// roots (2k+1)/(2p), k = 0..p-1, except 1/2.
inline ArcSet arcs_of_generator(const Integer& p) {
    if (p % 2 == 0) throw DomainError("p must be odd");
    if (p < 3) throw DomainError("p must be at least 3");
    if (p > materialization_limit()) throw DomainError("p = " + p.str() + " exceeds the materialization guard");
    const long n = static_cast<long>(p);
    std::vector<Arc> arcs;
    // Negative on ((4j+1)/(2p), (4j+3)/(2p)), merged across the removable 1/2.
    std::vector<TurnAngle> bounds;
    for (long k = 0; k < n; ++k) {
        if (2 * k + 1 == n) continue;
        bounds.emplace_back(Rational(2 * k + 1, 2 * n));
    }
    for (std::size_t i = 0; i + 1 < bounds.size(); i += 2) arcs.push_back({bounds[i], bounds[i + 1]});
    return ArcSet::from_arcs(arcs);
}

namespace detail {

/// Open interval on the real line (a lift of an arc), lo < hi.
struct Lift {
    Rational lo;
    Rational hi;
};

/// Elementary arc k of p: ((2k+1)/(2p), (2k+3)/(2p)), between consecutive
/// breakpoints counting 1/2 as one. Its sign is constant.
inline Lift elementary_arc(const Integer& p, const Integer& k) {
    return {Rational(2 * k + 1, 2 * p), Rational(2 * k + 3, 2 * p)};
}

inline int elementary_sign(const Integer& p, const Integer& k) { return generator_sign_at(p, TurnAngle(Rational(k + 1, p))); }

/// Leftmost maximal arc of sign s for p, merged across the removable 1/2.
inline Lift leftmost_arc(const Integer& p, int s) {
    const Integer last = p - 2;  // elementary arcs k = 0..p-2 cover (1/(2p), 1 - 1/(2p))
    for (Integer k = 0; k <= last; ++k) {
        if (elementary_sign(p, k) != s) continue;
        Lift arc = elementary_arc(p, k);
        if (arc.hi == Rational(1, 2)) arc.hi = elementary_arc(p, k + 1).hi;
        return arc;
    }
    // Only the arc through 0 remains.
    return {Rational(2 * p - 1, 2 * p), Rational(2 * p + 1, 2 * p)};
}

}  // namespace detail

/// A point theta with generator_sign_at(ps[i], theta) == signs[i] for every i.
/// Refines a lifted interval one generator at a time, each time choosing the
/// first elementary arc of the next p that lies inside it with the required
/// sign. Succeeds whenever consecutive ratios are at least 3; otherwise it may
/// still succeed, and throws DomainError when no elementary arc fits.
inline TurnAngle independence_witness(const std::vector<Integer>& ps, const std::vector<int>& signs) {
    if (ps.size() != signs.size()) throw DomainError("ps and signs must have the same length");
    if (ps.empty()) throw DomainError("independence witness needs at least one generator");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i] % 2 == 0 || ps[i] < 3) throw DomainError("p must be an odd integer >= 3");
        if (signs[i] != 1 && signs[i] != -1) throw DomainError("signs must be +1 or -1");
        if (i > 0 && !(ps[i - 1] < ps[i])) throw DomainError("ps must be strictly increasing");
    }
    detail::Lift cur = detail::leftmost_arc(ps[0], signs[0]);
    for (std::size_t i = 1; i < ps.size(); ++i) {
        const Integer& p = ps[i];
        // First k with (2k+1)/(2p) >= cur.lo.
        Integer k = ceil((Rational(2 * p) * cur.lo - 1) / 2);
        bool found = false;
        for (; Rational(2 * k + 3, 2 * p) <= cur.hi; ++k) {
            if (detail::elementary_sign(p, k) == signs[i]) {
                cur = detail::elementary_arc(p, k);
                found = true;
                break;
            }
        }
        if (!found) {
            throw DomainError("no elementary arc of p = " + p.str() + " with sign " + std::to_string(signs[i]) +
                              " fits inside the current interval; spacing precondition (ratio >= 3) violated");
        }
    }
    return TurnAngle((cur.lo + cur.hi) / 2);
}

}  // namespace gordian
