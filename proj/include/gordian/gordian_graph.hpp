#pragma once

// Embedding of a rooted tree into the gordian graph by iterated connected
// sums of generators, with per-pair distance certificates, and the detour
// construction that routes a path around a finite forbidden set.

#include <gordian/knots.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gordian {

/// A vertex of the rooted tree as the sequence of child indices from the root.
class TreeVertex {
public:
    TreeVertex() = default;
    explicit TreeVertex(std::vector<unsigned long> path) : path_(std::move(path)) {}

    static TreeVertex root() { return {}; }
    const std::vector<unsigned long>& path() const { return path_; }
    std::size_t depth() const { return path_.size(); }
    bool is_root() const { return path_.empty(); }

    TreeVertex parent() const {
        if (is_root()) throw DomainError("the root has no parent");
        return TreeVertex({path_.begin(), path_.end() - 1});
    }
    TreeVertex child(unsigned long i) const {
        auto p = path_;
        p.push_back(i);
        return TreeVertex(std::move(p));
    }
    TreeVertex prefix(std::size_t len) const { return TreeVertex({path_.begin(), path_.begin() + static_cast<long>(len)}); }

    friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
    friend auto operator<=>(const TreeVertex& a, const TreeVertex& b) {
        if (a.depth() != b.depth()) return a.depth() <=> b.depth();
        return a.path_ <=> b.path_;
    }

    /// `root`, or dot-separated child indices such as `0.1.1`.
    std::string to_string() const {
        if (path_.empty()) return "root";
        std::string out;
        for (std::size_t i = 0; i < path_.size(); ++i) {
            if (i) out += '.';
            out += std::to_string(path_[i]);
        }
        return out;
    }
    static TreeVertex parse(std::string_view text) {
        if (text == "root" || text.empty()) return root();
        std::vector<unsigned long> p;
        std::size_t start = 0;
        while (true) {
            auto dot = text.find_first_of(".,", start);
            auto piece = text.substr(start, dot - start);
            if (piece.empty()) throw ParseError("empty child index in vertex '" + std::string(text) + "'");
            for (char c : piece) {
                if (c < '0' || c > '9') throw ParseError("bad child index in vertex '" + std::string(text) + "'");
            }
            p.push_back(std::stoul(std::string(piece)));
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
        return TreeVertex(std::move(p));
    }

private:
    std::vector<unsigned long> path_;
};

inline TreeVertex meet(const TreeVertex& x, const TreeVertex& y) {
    std::size_t n = 0;
    while (n < x.depth() && n < y.depth() && x.path()[n] == y.path()[n]) ++n;
    return x.prefix(n);
}

inline std::size_t tree_distance(const TreeVertex& x, const TreeVertex& y) {
    const std::size_t m = meet(x, y).depth();
    return (x.depth() - m) + (y.depth() - m);
}

/// Numbers the edge above each non-root vertex by breadth-first order,
/// children left to right, starting at 1.
class EdgeNumbering {
public:
    /// Complete tree where every vertex has `arity` children.
    static EdgeNumbering regular(unsigned long arity = 2) {
        if (arity < 1) throw DomainError("arity must be positive");
        EdgeNumbering e;
        e.arity_ = arity;
        return e;
    }

    /// Breadth-first order over a finite explored subtree (closed under
    /// parents), for trees of unbounded valency.
    static EdgeNumbering explored(const std::vector<TreeVertex>& vertices) {
        std::set<TreeVertex> all;
        for (const auto& v : vertices) {
            for (std::size_t d = 1; d <= v.depth(); ++d) all.insert(v.prefix(d));
        }
        EdgeNumbering e;
        Integer n = 1;
        for (const auto& v : all) e.explicit_[v] = n++;
        return e;
    }

    Integer operator()(const TreeVertex& v) const {
        if (v.is_root()) throw DomainError("the root has no parent edge");
        if (!explicit_.empty() || arity_ == 0) {
            auto it = explicit_.find(v);
            if (it == explicit_.end()) throw DomainError("vertex " + v.to_string() + " is outside the explored subtree");
            return it->second;
        }
        const Integer b = arity_;
        Integer level_start = 1;  // BFS index of the first vertex at this depth
        Integer width = b;
        for (std::size_t d = 1; d < v.depth(); ++d) {
            level_start += width;
            width *= b;
        }
        Integer offset = 0;
        for (auto c : v.path()) {
            if (c >= arity_) throw DomainError("child index " + std::to_string(c) + " exceeds the arity " + std::to_string(arity_));
            offset = offset * b + c;
        }
        return level_start + offset;
    }

    unsigned long arity() const { return arity_; }

private:
    unsigned long arity_ = 0;
    std::map<TreeVertex, Integer> explicit_;
};

inline Integer edge_number(const TreeVertex& v) { return EdgeNumbering::regular(2)(v); }

namespace detail {

inline unsigned long index_of(const Integer& n) {
    if (n > Integer(1000000)) throw DomainError("edge number " + n.str() + " is too large to index the p-sequence");
    return static_cast<unsigned long>(n);
}

}  // namespace detail

/// root -> U; v -> phi(parent) # K_{p_{2n}} # mirror(K_{p_{2n+1}}), n the edge number.
inline FormalKnot phi(const TreeVertex& v, const EdgeNumbering& numbering = EdgeNumbering::regular()) {
    FormalKnot k;
    for (std::size_t d = 1; d <= v.depth(); ++d) {
        const unsigned long n = detail::index_of(numbering(v.prefix(d)));
        k = connected_sum(k, FormalKnot::generator(p_sequence(2 * n)));
        k = connected_sum(k, FormalKnot::generator(p_sequence(2 * n + 1), true));
    }
    return k;
}

/// One generator requested from the independence witness.
struct WitnessConstraint {
    unsigned long index;  // n in p_n
    Integer p;
    int sign;  // required sign of D_p at theta
    friend bool operator==(const WitnessConstraint&, const WitnessConstraint&) = default;
};

/// Distance witness for a pair of tree vertices. lower and upper bound the
/// gordian distance of phi(x) and phi(y): lower from the signature at theta,
/// upper from one crossing change per generator (a modelling axiom: a
/// connected sum with a gordian knot is one crossing change away).
struct IsometryCertificate {
    TreeVertex x, y, meet;
    unsigned long k = 0, l = 0;
    std::vector<WitnessConstraint> constraints;
    TurnAngle theta;
    Integer sigma_x, sigma_y;
    Integer difference;          // |sigma_x - sigma_y| at theta
    Integer claimed_difference;  // 4 (k + l), the value an isometry by 2 would need
    bool claim_reproduced = false;
    Integer lower, upper;
    bool valid = false;

    unsigned long tree_distance() const { return k + l; }
    friend bool operator==(const IsometryCertificate&, const IsometryCertificate&) = default;
};

inline IsometryCertificate certify_pair(const TreeVertex& x, const TreeVertex& y,
                                        const EdgeNumbering& numbering = EdgeNumbering::regular()) {
    IsometryCertificate c;
    c.x = x;
    c.y = y;
    c.meet = meet(x, y);
    c.k = x.depth() - c.meet.depth();
    c.l = y.depth() - c.meet.depth();
    // x side: K_{p_2n} inside A (sign -1), mirror outside; y side reversed.
    for (std::size_t d = c.meet.depth() + 1; d <= x.depth(); ++d) {
        const unsigned long n = detail::index_of(numbering(x.prefix(d)));
        c.constraints.push_back({2 * n, p_sequence(2 * n), -1});
        c.constraints.push_back({2 * n + 1, p_sequence(2 * n + 1), 1});
    }
    for (std::size_t d = c.meet.depth() + 1; d <= y.depth(); ++d) {
        const unsigned long n = detail::index_of(numbering(y.prefix(d)));
        c.constraints.push_back({2 * n, p_sequence(2 * n), 1});
        c.constraints.push_back({2 * n + 1, p_sequence(2 * n + 1), -1});
    }
    std::sort(c.constraints.begin(), c.constraints.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    if (!c.constraints.empty()) {
        std::vector<Integer> ps;
        std::vector<int> signs;
        for (const auto& w : c.constraints) {
            ps.push_back(w.p);
            signs.push_back(w.sign);
        }
        c.theta = independence_witness(ps, signs);
    }
    c.sigma_x = eval_formal_signature(phi(x, numbering), c.theta);
    c.sigma_y = eval_formal_signature(phi(y, numbering), c.theta);
    c.difference = boost::multiprecision::abs(c.sigma_x - c.sigma_y);
    c.claimed_difference = 4 * Integer(c.k + c.l);
    c.claim_reproduced = c.difference == c.claimed_difference;
    c.lower = ceil(Rational(c.difference, 2));
    c.upper = 2 * Integer(c.k + c.l);
    c.valid = c.lower == Integer(c.k + c.l) && c.lower <= c.upper;
    return c;
}

/// Recomputes everything a certificate asserts; true when it all matches.
inline bool validate_certificate(const IsometryCertificate& c, const EdgeNumbering& numbering = EdgeNumbering::regular()) {
    if (meet(c.x, c.y) != c.meet) return false;
    if (c.k != c.x.depth() - c.meet.depth() || c.l != c.y.depth() - c.meet.depth()) return false;
    for (const auto& w : c.constraints) {
        if (w.p != p_sequence(w.index)) return false;
        if (generator_sign_at(w.p, c.theta) != w.sign) return false;
    }
    const Integer sx = eval_formal_signature(phi(c.x, numbering), c.theta);
    const Integer sy = eval_formal_signature(phi(c.y, numbering), c.theta);
    if (sx != c.sigma_x || sy != c.sigma_y) return false;
    const Integer diff = boost::multiprecision::abs(sx - sy);
    if (diff != c.difference) return false;
    if (c.claimed_difference != 4 * Integer(c.k + c.l) || c.claim_reproduced != (diff == c.claimed_difference)) return false;
    if (c.lower != ceil(Rational(diff, 2)) || c.upper != 2 * Integer(c.k + c.l)) return false;
    const bool sandwich = c.lower == Integer(c.k + c.l) && c.lower <= c.upper;
    return c.valid == sandwich;
}

/// Every vertex of the complete tree of the given arity down to `depth`, in BFS order.
inline std::vector<TreeVertex> vertices_to_depth(std::size_t depth, unsigned long arity = 2) {
    std::vector<TreeVertex> out{TreeVertex::root()};
    std::size_t level_begin = 0;
    for (std::size_t d = 1; d <= depth; ++d) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (unsigned long c = 0; c < arity; ++c) out.push_back(out[i].child(c));
        }
        level_begin = level_end;
    }
    return out;
}

/// How two formal knots were told apart.
struct DistinctnessCertificate {
    enum class Kind { signature, alexander };
    Kind kind = Kind::signature;
    std::optional<TurnAngle> theta;  // signature
    Integer sigma_a, sigma_b;        // signature
    std::vector<Integer> factors_a, factors_b;  // alexander: p of each D_p factor, with repetition

    friend bool operator==(const DistinctnessCertificate&, const DistinctnessCertificate&) = default;
};

namespace detail {

inline std::vector<Integer> alexander_factors(const FormalKnot& k) {
    std::vector<Integer> out;
    for (const auto& [g, m] : k.generators()) {
        for (unsigned long i = 0; i < m; ++i) out.push_back(g.p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// A certificate that a and b are different knots: a theta where their
/// signatures differ, or different Alexander polynomials. Products of D_p
/// determine their factor multiset (the largest p is recovered from the
/// factor Phi_{2p}, then recursively), so distinct multisets certify distinct
/// polynomials.
inline std::optional<DistinctnessCertificate> certify_distinct(const FormalKnot& a, const FormalKnot& b) {
    try {
        const SignatureGap gap = signature_gap(a, b);
        if (gap.sup > 0 && gap.theta) {
            DistinctnessCertificate c;
            c.kind = DistinctnessCertificate::Kind::signature;
            c.theta = gap.theta;
            c.sigma_a = eval_formal_signature(a, *gap.theta);
            c.sigma_b = eval_formal_signature(b, *gap.theta);
            if (c.sigma_a != c.sigma_b) return c;
        }
    } catch (const DomainError&) {
        // fall through to the Alexander polynomial
    }
    auto fa = detail::alexander_factors(a);
    auto fb = detail::alexander_factors(b);
    if (fa != fb) {
        DistinctnessCertificate c;
        c.kind = DistinctnessCertificate::Kind::alexander;
        c.factors_a = std::move(fa);
        c.factors_b = std::move(fb);
        return c;
    }
    return std::nullopt;
}

/// Re-checks a distinctness certificate against the two knots.
inline bool check_distinct(const FormalKnot& a, const FormalKnot& b, const DistinctnessCertificate& c) {
    if (c.kind == DistinctnessCertificate::Kind::signature) {
        if (!c.theta) return false;
        const Integer sa = eval_formal_signature(a, *c.theta);
        const Integer sb = eval_formal_signature(b, *c.theta);
        return sa == c.sigma_a && sb == c.sigma_b && sa != sb;
    }
    return c.factors_a == detail::alexander_factors(a) && c.factors_b == detail::alexander_factors(b) && c.factors_a != c.factors_b;
}

/// Smallest odd p >= 3 with 1/p below every forbidden knot's minimal circle
/// root gap (one full turn when a knot has at most one root).
inline Integer choose_detour(const std::vector<FormalKnot>& forbidden) {
    Rational l = 1;
    for (const auto& k : forbidden) l = std::min(l, knot_root_gap(k).value);
    Integer p = floor(1 / l) + 1;
    if (p % 2 == 0) p += 1;
    return std::max(p, Integer(3));
}

struct DetourPlan {
    std::vector<FormalKnot> forbidden;
    std::vector<FormalKnot> path;
    Integer detour_p;
    std::vector<FormalKnot> detoured_path;

    friend bool operator==(const DetourPlan&, const DetourPlan&) = default;
};

/// [L_0, L_0 # K_p, ..., L_k # K_p, L_k] with p from choose_detour over the
/// forbidden knots together with the path.
inline DetourPlan build_detour(const std::vector<FormalKnot>& path, const std::vector<FormalKnot>& forbidden) {
    if (path.empty()) throw DomainError("detour path must be nonempty");
    for (const auto& f : forbidden) {
        if (f == path.front() || f == path.back()) throw DomainError("path endpoint " + f.to_string() + " is forbidden");
    }
    DetourPlan plan;
    plan.forbidden = forbidden;
    plan.path = path;
    std::vector<FormalKnot> all = forbidden;
    all.insert(all.end(), path.begin(), path.end());
    plan.detour_p = choose_detour(all);
    const FormalKnot kp = FormalKnot::generator(plan.detour_p);
    plan.detoured_path.push_back(path.front());
    for (const auto& step : path) plan.detoured_path.push_back(connected_sum(step, kp));
    plan.detoured_path.push_back(path.back());
    return plan;
}

struct DetourCheck {
    std::size_t entry;      // index into detoured_path
    std::size_t forbidden;  // index into forbidden
    DistinctnessCertificate certificate;
};

struct DetourReport {
    bool ok = true;
    std::vector<std::string> issues;
    std::vector<DetourCheck> checks;
};

/// Checks the move structure of the plan and certifies every entry distinct
/// from every forbidden knot.
inline DetourReport check_detour(const DetourPlan& plan) {
    DetourReport r;
    auto fail = [&](std::string why) {
        r.ok = false;
        r.issues.push_back(std::move(why));
    };
    if (plan.path.empty()) {
        fail("empty path");
        return r;
    }
    if (plan.detour_p % 2 == 0 || plan.detour_p < 3) {
        fail("detour p must be an odd integer >= 3");
        return r;
    }
    const FormalKnot kp = FormalKnot::generator(plan.detour_p);
    const auto& e = plan.detoured_path;
    const std::size_t n = plan.path.size();
    if (e.size() != n + 2) {
        fail("detoured path has " + std::to_string(e.size()) + " entries, expected " + std::to_string(n + 2));
        return r;
    }
    if (e.front() != plan.path.front()) fail("detour does not start at the path start");
    if (e.back() != plan.path.back()) fail("detour does not end at the path end");
    for (std::size_t i = 0; i < n; ++i) {
        if (e[i + 1] != connected_sum(plan.path[i], kp)) fail("entry " + std::to_string(i + 1) + " is not the path entry with K_p added");
    }
    // Moves: add K_p, then the original steps carried along, then remove K_p.
    if (connected_sum(e.front(), kp) != e[1]) fail("first move is not the addition of K_p");
    if (connected_sum(e.back(), kp) != e[n]) fail("last move is not the removal of K_p");

    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < plan.forbidden.size(); ++j) {
            auto c = certify_distinct(e[i], plan.forbidden[j]);
            if (!c || !check_distinct(e[i], plan.forbidden[j], *c)) {
                fail("entry " + std::to_string(i) + " (" + e[i].to_string() + ") cannot be certified distinct from forbidden " +
                     plan.forbidden[j].to_string());
                continue;
            }
            r.checks.push_back({i, j, std::move(*c)});
        }
    }
    return r;
}

inline bool verify_detour(const DetourPlan& plan) { return check_detour(plan).ok; }

}  // namespace gordian
