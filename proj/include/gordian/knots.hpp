#pragma once

// Formal knots: finite multisets of gordian generators K_p and their mirror
// images, combined by connected sum. A formal knot stands for the iterated
// connected sum of its generators; two formal knots are equal exactly when
// their multisets are (K # mirror(K) is never simplified to the unknot).

#include <gordian/circle.hpp>
#include <gordian/laurent.hpp>
#include <gordian/signature.hpp>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gordian {

struct GeneratorId {
    Integer p;
    bool mirrored = false;

    friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
    friend bool operator<(const GeneratorId& a, const GeneratorId& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.mirrored < b.mirrored;
    }
};

class FormalKnot {
public:
    using Multiset = std::map<GeneratorId, unsigned long>;

    /// The unknot U.
    FormalKnot() = default;

    static FormalKnot generator(const Integer& p, bool mirrored = false, unsigned long multiplicity = 1) {
        if (p % 2 == 0 || p < 3) throw DomainError("generator p must be an odd integer >= 3, got " + p.str());
        FormalKnot k;
        if (multiplicity > 0) k.gens_[{p, mirrored}] = multiplicity;
        return k;
    }

    const Multiset& generators() const { return gens_; }
    bool is_unknot() const { return gens_.empty(); }
    unsigned long multiplicity(const GeneratorId& g) const {
        auto it = gens_.find(g);
        return it == gens_.end() ? 0 : it->second;
    }
    /// Number of generators counted with multiplicity.
    unsigned long size() const {
        unsigned long n = 0;
        for (const auto& [g, m] : gens_) n += m;
        return n;
    }

    friend bool operator==(const FormalKnot&, const FormalKnot&) = default;
    friend bool operator<(const FormalKnot& a, const FormalKnot& b) { return a.gens_ < b.gens_; }

    /// Signed count of K_p minus mirror(K_p) for each p; zero entries dropped.
    std::map<Integer, Integer> signature_weights() const {
        std::map<Integer, Integer> w;
        for (const auto& [g, m] : gens_) w[g.p] += g.mirrored ? -Integer(m) : Integer(m);
        for (auto it = w.begin(); it != w.end();) it = it->second == 0 ? w.erase(it) : std::next(it);
        return w;
    }

    /// Human-readable, e.g. `K3 # !K15`; `U` for the unknot.
    std::string to_string() const {
        if (gens_.empty()) return "U";
        std::string out;
        for (const auto& [g, m] : gens_) {
            for (unsigned long i = 0; i < m; ++i) {
                if (!out.empty()) out += " # ";
                out += (g.mirrored ? "!K" : "K") + g.p.str();
            }
        }
        return out;
    }

private:
    friend FormalKnot connected_sum(const FormalKnot&, const FormalKnot&);
    friend FormalKnot mirror(const FormalKnot&);
    Multiset gens_;
};

inline FormalKnot connected_sum(const FormalKnot& a, const FormalKnot& b) {
    FormalKnot out = a;
    for (const auto& [g, m] : b.gens_) out.gens_[g] += m;
    return out;
}

inline FormalKnot mirror(const FormalKnot& k) {
    FormalKnot out;
    for (const auto& [g, m] : k.gens_) out.gens_[{g.p, !g.mirrored}] = m;
    return out;
}

/// p_n = (2n+1)(2n-1)...3, with the values computed so far kept around.
class PSequence {
public:
    Integer operator()(unsigned long n) {
        if (n < 1) throw DomainError("p_sequence index must be >= 1");
        std::lock_guard lock(mu_);
        if (cache_.empty()) cache_.push_back(3);
        while (cache_.size() < n) {
            const unsigned long next = cache_.size() + 1;
            cache_.push_back(cache_.back() * (2 * next + 1));
        }
        return cache_[n - 1];
    }

private:
    std::mutex mu_;
    std::vector<Integer> cache_;
};

inline Integer p_sequence(unsigned long n) {
    static PSequence seq;
    return seq(n);
}

/// Sum over generators of +-(1 - Sign D_p(e^{2 pi i theta})), negated for
/// mirrored generators. At a root the generator contributes +-1.
inline Integer eval_formal_signature(const FormalKnot& k, const TurnAngle& theta) {
    Integer total = 0;
    for (const auto& [g, m] : k.generators()) {
        const Integer term = Integer(1 - generator_sign_at(g.p, theta)) * m;
        total += g.mirrored ? -term : term;
    }
    return total;
}

/// Product of D_p over the generators (mirror images share the polynomial).
inline LaurentPoly alexander(const FormalKnot& k) {
    LaurentPoly out = LaurentPoly::one();
    for (const auto& [g, m] : k.generators()) {
        const LaurentPoly dp = torus_poly(g.p);
        for (unsigned long i = 0; i < m; ++i) out = out * dp;
    }
    return out;
}

/// Materialized signature function; every p must pass the guard.
inline StepFun signature_function(const FormalKnot& k) {
    StepFun total;
    for (const auto& [g, m] : k.generators()) {
        StepFun one = signature_of_poly(torus_poly(g.p));
        if (g.mirrored) one = -one;
        for (unsigned long i = 0; i < m; ++i) total = total + one;
    }
    return total;
}

/// sup over theta of |sigma_a - sigma_b| together with a point attaining it.
struct SignatureGap {
    Integer sup;
    std::optional<TurnAngle> theta;  // absent when sup == 0
};

namespace detail {

inline std::optional<TurnAngle> try_witness(const std::vector<Integer>& ps, const std::vector<int>& signs) {
    try {
        return independence_witness(ps, signs);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

inline Wide gcd128(Wide a, Wide b) {
    while (b != 0) {
        const Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Integer to_integer(UWide v) {
    Integer r(static_cast<unsigned long long>(v >> 64));
    r <<= 64;
    r += static_cast<unsigned long long>(v);
    return r;
}

/// Sign of D_p at num/den in [0, 1), same rule as generator_sign_at.
inline int machine_sign_at(Wide p, Wide num, Wide den) {
    const Wide top = 2 * p * num + den;
    const bool half = 2 * num == den;
    if (top % (2 * den) == 0 && !half) return 0;
    Wide c = top / (2 * den);
    if (2 * num >= den) c -= 1;
    return c % 2 == 0 ? 1 : -1;
}

/// Evaluate sum_p w_p (1 - s_p) at every arc midpoint of the merged root set.
inline SignatureGap enumerate_gap(const std::map<Integer, Integer>& w, const std::vector<Integer>& ps) {
    const auto roots = torus_root_fractions(ps);
    std::vector<std::pair<long, Integer>> weights;
    for (const auto& p : ps) weights.emplace_back(static_cast<long>(p), w.at(p));
    SignatureGap best{0, std::nullopt};
    auto consider = [&](Wide num, Wide den) {
        Integer diff = 0;
        for (const auto& [p, v] : weights) diff += v * (1 - machine_sign_at(p, num, den));
        if (diff < 0) diff = -diff;
        if (diff > best.sup) {
            best.sup = diff;
            best.theta = TurnAngle(Rational(to_integer(static_cast<UWide>(num)), to_integer(static_cast<UWide>(den))));
        }
    };
    if (roots.empty()) {
        consider(0, 1);
        return best;
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto [a, b] = roots[i];
        const auto [c, d] = roots[(i + 1) % roots.size()];
        // Midpoint of (a/b, c/d), wrapping past 1 on the last arc.
        const Wide hi = i + 1 == roots.size() ? static_cast<Wide>(c) + d : c;
        Wide num = static_cast<Wide>(a) * d + hi * b;
        Wide den = 2 * static_cast<Wide>(b) * d;
        const Wide g = gcd128(num, den);
        num /= g;
        den /= g;
        consider(num % den, den);
    }
    return best;
}

}  // namespace detail

/// The difference sigma_a - sigma_b equals sum_p w_p (1 - s_p(theta)) with
/// w_p the net signed weight. Its sup is at most max(sum of positive 2 w_p,
/// sum of negative 2|w_p|); the bound is attained wherever the extremal sign
/// pattern is realized, which the independence witness certifies. When it
/// cannot, the merged root set is enumerated (small p only).
inline SignatureGap signature_gap(const FormalKnot& a, const FormalKnot& b) {
    std::map<Integer, Integer> w = a.signature_weights();
    for (const auto& [p, v] : b.signature_weights()) w[p] -= v;
    std::vector<Integer> ps;
    Integer pos = 0;
    Integer neg = 0;
    for (const auto& [p, v] : w) {
        if (v == 0) continue;
        ps.push_back(p);
        if (v > 0) pos += 2 * v; else neg -= 2 * v;
    }
    if (ps.empty()) return {0, std::nullopt};
    // Inside A_p (sign -1) for positive weight maximizes; the reverse minimizes.
    auto pattern = [&](int positive_sign) {
        std::vector<int> s;
        for (const auto& p : ps) s.push_back(w[p] > 0 ? positive_sign : -positive_sign);
        return s;
    };
    const bool prefer_pos = pos >= neg;
    const Integer target = prefer_pos ? pos : neg;
    if (auto th = detail::try_witness(ps, pattern(prefer_pos ? -1 : 1))) return {target, th};
    const Integer guard = materialization_limit();
    for (const auto& p : ps) {
        if (p > guard) throw DomainError("cannot certify the signature gap: p = " + p.str() + " is not materializable and no witness exists");
    }
    return detail::enumerate_gap(w, ps);
}

/// ceil(sup |sigma_a - sigma_b| / 2), a lower bound on the gordian distance.
inline Integer distance_lower_bound(const FormalKnot& a, const FormalKnot& b) {
    return ceil(Rational(signature_gap(a, b).sup, 2));
}

/// Size of the multiset symmetric difference: every generator is removable
/// by one crossing change.
inline Integer unknotting_upper_bound(const FormalKnot& a, const FormalKnot& b) {
    Integer n = 0;
    for (const auto& [g, m] : a.generators()) {
        const unsigned long other = b.multiplicity(g);
        n += m > other ? m - other : other - m;
    }
    for (const auto& [g, m] : b.generators()) {
        if (a.multiplicity(g) == 0) n += m;
    }
    return n;
}

/// Distinct p of a knot, ignoring mirror flags.
inline std::vector<Integer> distinct_p(const FormalKnot& k) {
    std::vector<Integer> ps;
    for (const auto& [g, m] : k.generators()) {
        if (ps.empty() || ps.back() != g.p) ps.push_back(g.p);
    }
    return ps;
}

/// Minimal gap between consecutive circle roots of alexander(k), exact,
/// computed from the generator roots (2k+1)/(2p) without materializing.
inline RootGap knot_root_gap(const FormalKnot& k) {
    return detail::gap_of_sorted(detail::torus_roots(distinct_p(k)));
}

}  // namespace gordian
