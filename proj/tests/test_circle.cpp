#include "support.hpp"

#include <gtest/gtest.h>

using namespace gordian;
using namespace gordian::testing;

namespace {

// Points at which every boundary of sets drawn by Gen::arcs is avoided.
TurnAngle probe(Gen& g) { return TurnAngle(Rational(2 * g.uniform(0, 27719) + 1, 2 * 27720)); }

int float_sign(long p, const Rational& theta) {
    const double v = eval_on_circle(torus_poly(p), to_double(theta));
    return v > 0 ? 1 : -1;
}

}  // namespace

TEST(TurnAngle, ReducesModuloOne) {
    EXPECT_EQ(TurnAngle(Rational(5, 4)), TurnAngle(Rational(1, 4)));
    EXPECT_EQ(TurnAngle(Rational(-1, 3)).value(), Rational(2, 3));
    EXPECT_EQ(TurnAngle(1).value(), 0);
    EXPECT_EQ(TurnAngle::parse("7/6").to_string(), "1/6");
    EXPECT_EQ(TurnAngle().to_string(), "0/1");
}

TEST(ArcSet, BasicShapes) {
    const ArcSet a = ArcSet::from_arcs({{TurnAngle(1, 6), TurnAngle(5, 6)}});
    EXPECT_EQ(a.measure(), Rational(2, 3));
    EXPECT_TRUE(a.contains(TurnAngle(1, 2)));
    EXPECT_FALSE(a.contains(TurnAngle(1, 6)));  // open arcs
    const ArcSet c = a.complement();
    EXPECT_EQ(c.arcs().size(), 1U);
    EXPECT_TRUE(c.arcs()[0].wraps());
    EXPECT_TRUE(c.contains(TurnAngle()));
    EXPECT_EQ(c.measure(), Rational(1, 3));
    EXPECT_TRUE(a.intersect(c).is_empty());
    // Regular open sets: the union is the circle minus two points, which
    // regularizes to the full circle.
    EXPECT_TRUE(a.unite(c).is_full());
    EXPECT_EQ(ArcSet::full().complement(), ArcSet::empty());
}

TEST(ArcSet, WitnessAndText) {
    const ArcSet s = ArcSet::from_arcs({{TurnAngle(7, 8), TurnAngle(1, 8)}, {TurnAngle(1, 4), TurnAngle(1, 3)}});
    ASSERT_TRUE(s.witness().has_value());
    EXPECT_TRUE(s.contains(*s.witness()));
    EXPECT_FALSE(ArcSet::empty().witness().has_value());
    EXPECT_EQ(ArcSet::parse(s.to_string()), s);
    EXPECT_EQ(ArcSet::parse("[]"), ArcSet::empty());
    EXPECT_EQ(ArcSet::parse("[full]"), ArcSet::full());
    EXPECT_THROW(ArcSet::parse("(1/2,1/3)"), ParseError);
}

TEST(ArcSet, BooleanAlgebraLaws) {
    Gen g(31);
    for (int i = 0; i < 300; ++i) {
        const ArcSet a = g.arcs();
        const ArcSet b = g.arcs();
        const ArcSet c = g.arcs();
        EXPECT_EQ(a.intersect(b), b.intersect(a));
        EXPECT_EQ(a.unite(b), b.unite(a));
        EXPECT_EQ(a.intersect(b).intersect(c), a.intersect(b.intersect(c)));
        EXPECT_EQ(a.unite(b).unite(c), a.unite(b.unite(c)));
        EXPECT_EQ(a.intersect(b.unite(c)), a.intersect(b).unite(a.intersect(c)));
        EXPECT_EQ(a.unite(b.intersect(c)), a.unite(b).intersect(a.unite(c)));
        EXPECT_EQ(a.unite(b).complement(), a.complement().intersect(b.complement()));
        EXPECT_EQ(a.intersect(b).complement(), a.complement().unite(b.complement()));
        EXPECT_EQ(a.complement().complement(), a);
        EXPECT_EQ(a.unite(a.intersect(b)), a);
        EXPECT_EQ(a.intersect(ArcSet::full()), a);
        EXPECT_EQ(a.unite(ArcSet::empty()), a);
        EXPECT_TRUE(a.intersect(a.complement()).is_empty());
        EXPECT_TRUE(a.unite(a.complement()).is_full());
        EXPECT_EQ(a.unite(b).measure() + a.intersect(b).measure(), a.measure() + b.measure());
        EXPECT_EQ(a.minus(b), a.intersect(b.complement()));
        EXPECT_EQ(ArcSet::parse(a.to_string()), a);
        for (int j = 0; j < 5; ++j) {
            const TurnAngle x = probe(g);
            EXPECT_EQ(a.intersect(b).contains(x), a.contains(x) && b.contains(x));
            EXPECT_EQ(a.unite(b).contains(x), a.contains(x) || b.contains(x));
            EXPECT_EQ(a.complement().contains(x), !a.contains(x));
        }
        if (auto w = a.witness()) {
            EXPECT_TRUE(a.contains(*w));
        } else {
            EXPECT_TRUE(a.is_empty());
        }
    }
}

TEST(GeneratorSign, MatchesFloatingPointEvaluation) {
    Gen g(32);
    for (long p = 3; p <= 105; p += 2) {
        for (int i = 0; i < 40; ++i) {
            const TurnAngle th = g.turn(997);
            const Rational x = Rational(p) * th.value() + Rational(1, 2);
            if (is_integer(x) && th.value() != Rational(1, 2)) {
                EXPECT_EQ(generator_sign_at(p, th), 0);
                continue;
            }
            EXPECT_EQ(generator_sign_at(p, th), float_sign(p, th.value())) << p << " at " << th.to_string();
        }
    }
}

TEST(GeneratorSign, RootsAndSpecialPoints) {
    EXPECT_EQ(generator_sign_at(3, TurnAngle(Rational(1, 6))), 0);
    EXPECT_EQ(generator_sign_at(3, TurnAngle(Rational(5, 6))), 0);
    EXPECT_EQ(generator_sign_at(3, TurnAngle(Rational(1, 2))), -1);  // D_3(-1) = -3
    EXPECT_EQ(generator_sign_at(5, TurnAngle(Rational(1, 2))), 1);   // D_5(-1) = 5
    EXPECT_EQ(generator_sign_at(7, TurnAngle()), 1);
    EXPECT_THROW(generator_sign_at(4, TurnAngle()), DomainError);
}

TEST(ArcsOfGenerator, MeasureAndMembership) {
    Gen g(33);
    for (long p = 3; p <= 105; p += 2) {
        const ArcSet a = arcs_of_generator(p);
        const Rational extra = p % 4 == 3 ? Rational(1, p) : Rational(0);
        EXPECT_EQ(a.measure(), Rational(p - 1, 2 * p) + extra) << p;
        // Boundary is exactly the roots (2k+1)/(2p) other than 1/2.
        std::vector<TurnAngle> expected;
        for (long k = 0; k < p; ++k) {
            if (2 * k + 1 != p) expected.emplace_back(Rational(2 * k + 1, 2 * p));
        }
        EXPECT_EQ(a.boundary(), expected);
        for (int i = 0; i < 30; ++i) {
            const TurnAngle th = g.turn(1000);
            const int s = generator_sign_at(p, th);
            if (s != 0) {
                EXPECT_EQ(a.contains(th), s < 0) << p << " " << th.to_string();
            }
        }
    }
    EXPECT_EQ(arcs_of_generator(3).to_string(), "[(1/6,5/6)]");
    EXPECT_EQ(arcs_of_generator(5).to_string(), "[(1/10,3/10),(7/10,9/10)]");
}

TEST(ArcsOfGenerator, Guard) {
    EXPECT_THROW(arcs_of_generator(Integer("1000000000000000000001")), DomainError);
    EXPECT_THROW(arcs_of_generator(8), DomainError);
}

TEST(IndependenceWitness, Examples) {
    EXPECT_EQ(independence_witness({3}, {-1}), TurnAngle(Rational(1, 2)));
    EXPECT_EQ(independence_witness({3, 15}, {-1, 1}), TurnAngle(Rational(4, 15)));
}

TEST(IndependenceWitness, RandomPatternsOnSpreadSequences) {
    Gen g(34);
    for (int i = 0; i < 300; ++i) {
        std::vector<Integer> ps;
        Integer p = 2 * g.uniform(1, 4) + 1;
        const long n = g.uniform(1, 8);
        for (long j = 0; j < n; ++j) {
            ps.push_back(p);
            p = p * (2 * g.uniform(1, 6) + 1);  // ratio >= 3, odd
        }
        std::vector<int> signs;
        for (long j = 0; j < n; ++j) signs.push_back(g.coin() ? 1 : -1);
        const TurnAngle th = independence_witness(ps, signs);
        for (long j = 0; j < n; ++j) EXPECT_EQ(generator_sign_at(ps[static_cast<std::size_t>(j)], th), signs[static_cast<std::size_t>(j)]);
        for (long j = 0; j < n; ++j) {
            const Integer& q = ps[static_cast<std::size_t>(j)];
            if (q > 105) break;
            EXPECT_EQ(arcs_of_generator(q).contains(th), signs[static_cast<std::size_t>(j)] < 0);
        }
    }
}

TEST(IndependenceWitness, HugeGenerators) {
    std::vector<Integer> ps;
    std::vector<int> signs;
    for (unsigned long n = 1; n <= 30; ++n) {
        ps.push_back(p_sequence(n));
        signs.push_back(n % 3 == 0 ? 1 : -1);
    }
    const TurnAngle th = independence_witness(ps, signs);
    for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_EQ(generator_sign_at(ps[i], th), signs[i]);
}

TEST(IndependenceWitness, Preconditions) {
    EXPECT_THROW(independence_witness({15, 3}, {1, 1}), DomainError);
    EXPECT_THROW(independence_witness({3}, {1, 1}), DomainError);
    EXPECT_THROW(independence_witness({3}, {0}), DomainError);
    EXPECT_THROW(independence_witness({}, {}), DomainError);
}
