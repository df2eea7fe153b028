#include "support.hpp"

#include <gtest/gtest.h>

using namespace gordian;
using namespace gordian::testing;

namespace {

FormalKnot K(long p) { return FormalKnot::generator(p); }
FormalKnot M(long p) { return FormalKnot::generator(p, true); }

// Double factorial (2n+1)!! computed independently.
Integer double_factorial(unsigned long m) {
    Integer r = 1;
    for (unsigned long i = m; i > 1; i -= 2) r *= i;
    return r;
}

}  // namespace

TEST(FormalKnot, MultisetSemantics) {
    const FormalKnot a = connected_sum(K(3), M(15));
    EXPECT_EQ(a.to_string(), "K3 # !K15");
    EXPECT_EQ(connected_sum(a, FormalKnot()), a);
    EXPECT_EQ(connected_sum(K(3), K(5)), connected_sum(K(5), K(3)));
    EXPECT_NE(connected_sum(K(3), M(3)), FormalKnot());  // never cancelled
    EXPECT_EQ(mirror(mirror(a)), a);
    EXPECT_EQ(mirror(a), connected_sum(M(3), K(15)));
    EXPECT_EQ(FormalKnot().to_string(), "U");
    EXPECT_EQ(connected_sum(K(3), K(3)).size(), 2U);
    EXPECT_THROW(FormalKnot::generator(9 - 1), DomainError);
    EXPECT_THROW(FormalKnot::generator(1), DomainError);
}

TEST(PSequence, DoubleFactorials) {
    EXPECT_EQ(p_sequence(1), 3);
    EXPECT_EQ(p_sequence(2), 15);
    EXPECT_EQ(p_sequence(3), 105);
    EXPECT_EQ(p_sequence(4), 945);
    EXPECT_EQ(p_sequence(5), 10395);
    for (unsigned long n = 1; n <= 40; ++n) EXPECT_EQ(p_sequence(n), double_factorial(2 * n + 1));
    EXPECT_THROW(p_sequence(0), DomainError);
}

TEST(FormalSignature, Example) {
    EXPECT_EQ(eval_formal_signature(connected_sum(K(3), M(15)), TurnAngle(Rational(1, 15))), -2);
    EXPECT_EQ(eval_formal_signature(K(3), TurnAngle(Rational(1, 2))), 2);
    EXPECT_EQ(eval_formal_signature(K(3), TurnAngle(Rational(1, 6))), 1);
    EXPECT_EQ(eval_formal_signature(FormalKnot(), TurnAngle(Rational(1, 3))), 0);
}

TEST(FormalSignature, AdditivityAndMirror) {
    Gen g(51);
    for (int i = 0; i < 300; ++i) {
        const FormalKnot a = g.knot(4, 41);
        const FormalKnot b = g.knot(4, 41);
        const TurnAngle th = g.turn(200);
        EXPECT_EQ(eval_formal_signature(connected_sum(a, b), th), eval_formal_signature(a, th) + eval_formal_signature(b, th));
        EXPECT_EQ(eval_formal_signature(mirror(a), th), -eval_formal_signature(a, th));
    }
}

TEST(SignatureFunction, AdditivityAndMirror) {
    Gen g(52);
    for (int i = 0; i < 200; ++i) {
        const FormalKnot a = g.knot(3, 21);
        const FormalKnot b = g.knot(3, 21);
        EXPECT_EQ(signature_function(connected_sum(a, b)), signature_function(a) + signature_function(b));
        EXPECT_EQ(signature_function(mirror(a)), -signature_function(a));
        const TurnAngle th = g.turn(500);
        EXPECT_EQ(signature_function(a).value_at(th), Rational(eval_formal_signature(a, th)));
    }
}

TEST(Alexander, ProductOfTorusPolynomials) {
    EXPECT_EQ(alexander(connected_sum(K(3), M(5))), torus_poly(3) * torus_poly(5));
    EXPECT_EQ(alexander(FormalKnot()), LaurentPoly::one());
    EXPECT_TRUE(is_normalized(alexander(connected_sum(K(7), K(7)))));
}

TEST(SignatureGap, AgreesWithStepFunctions) {
    Gen g(53);
    for (int i = 0; i < 250; ++i) {
        const FormalKnot a = g.knot(4, 27);
        const FormalKnot b = g.knot(4, 27);
        const SignatureGap gap = signature_gap(a, b);
        EXPECT_EQ(gap.sup, sup_distance(signature_function(a), signature_function(b))) << a.to_string() << " vs " << b.to_string();
        if (gap.sup > 0) {
            ASSERT_TRUE(gap.theta.has_value());
            Integer v = eval_formal_signature(a, *gap.theta) - eval_formal_signature(b, *gap.theta);
            EXPECT_EQ(v < 0 ? Integer(-v) : v, gap.sup);
        }
    }
}

TEST(SignatureGap, HugeGeneratorsUseTheWitness) {
    const FormalKnot a = connected_sum(FormalKnot::generator(p_sequence(20)), FormalKnot::generator(p_sequence(25)));
    const SignatureGap gap = signature_gap(a, FormalKnot());
    EXPECT_EQ(gap.sup, 4);
    ASSERT_TRUE(gap.theta.has_value());
    EXPECT_EQ(eval_formal_signature(a, *gap.theta), 4);
}

TEST(DistanceBounds, PseudometricAndSandwich) {
    Gen g(54);
    for (int i = 0; i < 250; ++i) {
        const FormalKnot a = g.knot(4, 21);
        const FormalKnot b = g.knot(4, 21);
        const FormalKnot c = g.knot(4, 21);
        EXPECT_EQ(distance_lower_bound(a, a), 0);
        EXPECT_EQ(distance_lower_bound(a, b), distance_lower_bound(b, a));
        EXPECT_LE(distance_lower_bound(a, c), distance_lower_bound(a, b) + distance_lower_bound(b, c));
        EXPECT_LE(distance_lower_bound(a, b), unknotting_upper_bound(a, b));
        EXPECT_EQ(unknotting_upper_bound(a, b), unknotting_upper_bound(b, a));
        EXPECT_LE(unknotting_upper_bound(a, c), unknotting_upper_bound(a, b) + unknotting_upper_bound(b, c));
        // One crossing change moves the signature by at most 2.
        const FormalKnot ak = connected_sum(a, FormalKnot::generator(2 * g.uniform(1, 10) + 1, g.coin()));
        EXPECT_LE(distance_lower_bound(a, ak), 1);
    }
    EXPECT_EQ(unknotting_upper_bound(connected_sum(K(3), K(3)), K(3)), 1);
    EXPECT_EQ(distance_lower_bound(K(3), FormalKnot()), 1);
}

TEST(KnotRootGap, MergedRoots) {
    EXPECT_EQ(knot_root_gap(K(3)).value, Rational(1, 3));
    EXPECT_EQ(knot_root_gap(connected_sum(K(3), K(5))).value, Rational(1, 15));
    EXPECT_EQ(knot_root_gap(FormalKnot()).value, 1);
    Gen g(55);
    for (int i = 0; i < 100; ++i) {
        const FormalKnot k = g.knot(4, 35);
        std::vector<long> ps;
        for (const auto& p : distinct_p(k)) ps.push_back(static_cast<long>(p));
        EXPECT_EQ(knot_root_gap(k).value, circular_gap(known_roots(ps)));
        if (!ps.empty() && k.size() == ps.size()) {
            EXPECT_EQ(knot_root_gap(k).value, min_root_gap(alexander(k)).value);
        }
    }
}

TEST(SignatureGap, EnumerationMatchesRationalMidpoints) {
    Gen g(56);
    for (int i = 0; i < 200; ++i) {
        const FormalKnot a = g.knot(4, 45);
        const FormalKnot b = g.knot(4, 45);
        std::map<Integer, Integer> w = a.signature_weights();
        for (const auto& [p, v] : b.signature_weights()) w[p] -= v;
        std::vector<Integer> ps;
        std::vector<long> small;
        for (const auto& [p, v] : w) {
            if (v == 0) continue;
            ps.push_back(p);
            small.push_back(static_cast<long>(p));
        }
        if (ps.empty()) continue;
        const SignatureGap fast = detail::enumerate_gap(w, ps);
        // Reference: every midpoint of the sorted merged roots, in exact rationals.
        const auto roots = known_roots(small);
        Integer best = 0;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            const Rational hi = j + 1 == roots.size() ? roots.front() + 1 : roots[j + 1];
            const TurnAngle th((roots[j] + hi) / 2);
            Integer d = eval_formal_signature(a, th) - eval_formal_signature(b, th);
            if (d < 0) d = -d;
            best = std::max(best, d);
        }
        EXPECT_EQ(fast.sup, best) << a.to_string() << " vs " << b.to_string();
        if (fast.sup > 0) {
            ASSERT_TRUE(fast.theta.has_value());
            Integer d = eval_formal_signature(a, *fast.theta) - eval_formal_signature(b, *fast.theta);
            EXPECT_EQ(d < 0 ? Integer(-d) : d, fast.sup);
        }
    }
}

TEST(SignatureGap, MachineSignMatchesExact) {
    Gen g(57);
    for (int i = 0; i < 2000; ++i) {
        const long p = 2 * g.uniform(1, 200) + 1;
        const long den = g.uniform(1, 5000);
        const long num = g.uniform(0, den - 1);
        EXPECT_EQ(detail::machine_sign_at(p, num, den), generator_sign_at(p, TurnAngle(Rational(num, den)))) << p << " " << num << "/" << den;
    }
    EXPECT_EQ(detail::machine_sign_at(3, 1, 2), -1);
    EXPECT_EQ(detail::machine_sign_at(3, 1, 6), 0);
}
