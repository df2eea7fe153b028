#pragma once

// Sturm chains and exact real root isolation on a closed rational interval.

#include <gordian/polynomial.hpp>

#include <vector>

namespace gordian {

class SturmChain {
public:
    /// p must be nonzero; the chain is built on its square-free part, so the
    /// count is of distinct roots.
    explicit SturmChain(const IntPoly& p) {
        if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
        IntPoly s = squarefree_part(p);
        chain_.push_back(s);
        if (s.degree() <= 0) return;
        chain_.push_back(s.derivative().primitive());
        while (chain_.back().degree() > 0) {
            IntPoly r = positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
            if (r.is_zero()) break;
            chain_.push_back(-r);
        }
    }

    const IntPoly& squarefree() const { return chain_.front(); }
    const std::vector<IntPoly>& chain() const { return chain_; }

    /// Sign variations at x, zeros skipped.
    int variations(const Rational& x) const {
        int count = 0;
        int last = 0;
        for (const auto& p : chain_) {
            int s = p.sign_at(x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    /// Number of distinct roots in the half-open interval (a, b].
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

private:
    std::vector<IntPoly> chain_;
};

/// A rational interval holding exactly one root of a square-free polynomial.
/// Either degenerate (lo == hi, the root itself) or open with nonzero values
/// of opposite sign at both ends.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;

    /// Bisects until hi - lo <= width or the root is hit exactly.
    void refine(const IntPoly& squarefree, const Rational& width) {
        if (exact()) return;
        int slo = squarefree.sign_at(lo);
        while (hi - lo > width) {
            Rational mid = (lo + hi) / 2;
            int sm = squarefree.sign_at(mid);
            if (sm == 0) {
                lo = hi = mid;
                return;
            }
            if (sm == slo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    /// One bisection step; no-op for exact intervals.
    void bisect(const IntPoly& squarefree) {
        if (!exact()) refine(squarefree, width() / 2);
    }

    bool contains(const Rational& x) const { return exact() ? x == lo : (lo < x && x < hi); }
};

namespace detail {

/// A split point strictly inside (a, b) that is not a root of p. Tries the
/// midpoint first, then nearby simple fractions.
inline Rational non_root_split(const IntPoly& p, const Rational& a, const Rational& b) {
    for (int den = 2;; ++den) {
        for (int num = 1; num < den; ++num) {
            Rational m = a + (b - a) * Rational(num, den);
            if (p.sign_at(m) != 0) return m;
        }
    }
}

}  // namespace detail

/// Isolates every distinct real root of p in the closed interval [lo, hi].
/// Roots sitting exactly on lo or hi come back as degenerate intervals.
/// The result is sorted increasingly and intervals are pairwise disjoint.
inline std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw DomainError("cannot isolate the roots of the zero polynomial");
    if (!(lo < hi)) throw DomainError("isolation interval must satisfy lo < hi");
    SturmChain sturm(p);
    const IntPoly& s = sturm.squarefree();
    std::vector<IsolatingInterval> out;
    if (s.degree() <= 0) return out;

    Rational a = lo;
    Rational b = hi;
    const bool lo_root = s.sign_at(lo) == 0;
    const bool hi_root = s.sign_at(hi) == 0;
    // Shrink past boundary roots so every open interval has non-root ends.
    if (lo_root) {
        Rational step = (hi - lo) / 2;
        while (s.sign_at(lo + step) == 0 || sturm.count(lo, lo + step) != 0) step /= 2;
        a = lo + step;
    }
    if (hi_root) {
        Rational step = (hi - lo) / 2;
        while (s.sign_at(hi - step) == 0 || sturm.count(hi - step, hi) != 1) step /= 2;
        b = hi - step;
    }

    struct Pending {
        Rational a, b;
        int n;
    };
    std::vector<Pending> stack{{a, b, sturm.count(a, b)}};
    std::vector<IsolatingInterval> inner;
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        if (cur.n == 0) continue;
        if (cur.n == 1) {
            inner.push_back({cur.a, cur.b});
            continue;
        }
        Rational m = detail::non_root_split(s, cur.a, cur.b);
        stack.push_back({m, cur.b, sturm.count(m, cur.b)});
        stack.push_back({cur.a, m, sturm.count(cur.a, m)});
    }
    std::sort(inner.begin(), inner.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });

    if (lo_root) out.push_back({lo, lo});
    out.insert(out.end(), inner.begin(), inner.end());
    if (hi_root) out.push_back({hi, hi});
    return out;
}

}  // namespace gordian
