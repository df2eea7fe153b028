#include "support.hpp"

#include <gtest/gtest.h>

using namespace gordian;
using namespace gordian::testing;

namespace {

TreeVertex V(std::vector<unsigned long> p) { return TreeVertex(std::move(p)); }
FormalKnot K(long p) { return FormalKnot::generator(p); }
FormalKnot M(long p) { return FormalKnot::generator(p, true); }

}  // namespace

TEST(TreeVertex, TextAndOrder) {
    EXPECT_EQ(TreeVertex::parse("0.1.1"), V({0, 1, 1}));
    EXPECT_EQ(TreeVertex::parse("0,1"), V({0, 1}));
    EXPECT_EQ(TreeVertex::parse("root"), TreeVertex::root());
    EXPECT_EQ(V({1, 0}).to_string(), "1.0");
    EXPECT_THROW(TreeVertex::parse("0..1"), ParseError);
    EXPECT_THROW(TreeVertex::parse("a"), ParseError);
    EXPECT_LT(V({1}), V({0, 0}));
    EXPECT_EQ(meet(V({0, 1, 1}), V({0, 1, 0, 0})), V({0, 1}));
    EXPECT_EQ(tree_distance(V({0, 1, 1}), V({0, 1, 0, 0})), 3U);
    EXPECT_EQ(tree_distance(V({}), V({1, 1})), 2U);
}

TEST(EdgeNumber, BreadthFirst) {
    EXPECT_EQ(edge_number(V({0})), 1);
    EXPECT_EQ(edge_number(V({1})), 2);
    EXPECT_EQ(edge_number(V({0, 0})), 3);
    EXPECT_EQ(edge_number(V({1, 1})), 6);
    EXPECT_EQ(edge_number(V({0, 0, 0})), 7);
    EXPECT_THROW(edge_number(V({})), DomainError);
    EXPECT_THROW(edge_number(V({2})), DomainError);
    // Independent count: BFS enumeration of the complete tree.
    const auto vs = vertices_to_depth(5);
    for (std::size_t i = 1; i < vs.size(); ++i) EXPECT_EQ(edge_number(vs[i]), Integer(i));
    const auto ternary = vertices_to_depth(3, 3);
    const auto numbering = EdgeNumbering::regular(3);
    for (std::size_t i = 1; i < ternary.size(); ++i) EXPECT_EQ(numbering(ternary[i]), Integer(i));
}

TEST(EdgeNumber, ExploredSubtree) {
    const auto e = EdgeNumbering::explored({V({5, 2}), V({0}), V({7})});
    EXPECT_EQ(e(V({0})), 1);
    EXPECT_EQ(e(V({5})), 2);
    EXPECT_EQ(e(V({7})), 3);
    EXPECT_EQ(e(V({5, 2})), 4);
    EXPECT_THROW(e(V({1})), DomainError);
    const FormalKnot k = phi(V({5, 2}), e);
    // Edges 2 and 4 carry p_4, p_5, p_8 and p_9.
    FormalKnot expected = connected_sum(K(945), M(10395));
    expected = connected_sum(expected, FormalKnot::generator(p_sequence(8)));
    expected = connected_sum(expected, FormalKnot::generator(p_sequence(9), true));
    EXPECT_EQ(k, expected);
}

TEST(Phi, Examples) {
    EXPECT_EQ(phi(TreeVertex::root()), FormalKnot());
    EXPECT_EQ(phi(V({0})), connected_sum(K(15), M(105)));
    EXPECT_EQ(phi(V({1})), connected_sum(K(945), M(10395)));
    EXPECT_EQ(phi(V({0})).to_string(), "K15 # !K105");
    const FormalKnot deep = phi(V({1, 1, 1}));
    EXPECT_EQ(deep.size(), 6U);
    EXPECT_EQ(deep.multiplicity({p_sequence(28), false}), 1U);  // edge 14
    EXPECT_EQ(deep.multiplicity({p_sequence(29), true}), 1U);
}

TEST(Certificate, AdjacentChildren) {
    const IsometryCertificate c = certify_pair(V({0}), V({1}));
    EXPECT_EQ(c.tree_distance(), 2U);
    EXPECT_EQ(c.lower, 2);
    EXPECT_EQ(c.upper, 4);
    EXPECT_EQ(c.difference, 4);
    EXPECT_EQ(c.claimed_difference, 8);
    EXPECT_FALSE(c.claim_reproduced);
    EXPECT_TRUE(c.valid);
    EXPECT_TRUE(validate_certificate(c));
    for (const auto& w : c.constraints) EXPECT_EQ(generator_sign_at(w.p, c.theta), w.sign);
}

TEST(Certificate, SameVertexAndAncestor) {
    const IsometryCertificate same = certify_pair(V({0, 1}), V({0, 1}));
    EXPECT_EQ(same.lower, 0);
    EXPECT_EQ(same.upper, 0);
    EXPECT_TRUE(validate_certificate(same));
    const IsometryCertificate anc = certify_pair(TreeVertex::root(), V({1, 0, 1}));
    EXPECT_EQ(anc.lower, 3);
    EXPECT_EQ(anc.upper, 6);
    EXPECT_TRUE(anc.valid);
    EXPECT_TRUE(validate_certificate(anc));
}

TEST(Certificate, TamperingIsDetected) {
    const IsometryCertificate c = certify_pair(V({0, 0}), V({1}));
    ASSERT_TRUE(validate_certificate(c));
    auto t = c;
    t.theta = TurnAngle(Rational(1, 3));
    EXPECT_FALSE(validate_certificate(t));
    t = c;
    t.lower += 1;
    EXPECT_FALSE(validate_certificate(t));
    t = c;
    t.claim_reproduced = true;
    EXPECT_FALSE(validate_certificate(t));
    t = c;
    t.constraints[0].sign = -t.constraints[0].sign;
    EXPECT_FALSE(validate_certificate(t));
    t = c;
    t.sigma_x += 2;
    EXPECT_FALSE(validate_certificate(t));
}

TEST(Certificate, AllPairsToDepthThree) {
    const auto vs = vertices_to_depth(3);
    ASSERT_EQ(vs.size(), 15U);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < vs.size(); ++j) {
            const IsometryCertificate c = certify_pair(vs[i], vs[j]);
            const Integer d = tree_distance(vs[i], vs[j]);
            EXPECT_EQ(c.lower, d);
            EXPECT_EQ(c.upper, 2 * d);
            EXPECT_EQ(c.difference, 2 * d);
            EXPECT_TRUE(validate_certificate(c));
            // The signature bound is also the library's general lower bound.
            if (i < 4 && j < 4) {
                EXPECT_EQ(distance_lower_bound(phi(vs[i]), phi(vs[j])), d);
            }
        }
    }
}

TEST(Distinctness, CertificatesRecheck) {
    Gen g(61);
    for (int i = 0; i < 200; ++i) {
        const FormalKnot a = g.knot(4, 21);
        const FormalKnot b = g.knot(4, 21);
        const auto c = certify_distinct(a, b);
        if (a == b) {
            EXPECT_FALSE(c.has_value());
            continue;
        }
        // K # mirror K and U share signature but not Alexander polynomial.
        ASSERT_TRUE(c.has_value()) << a.to_string() << " vs " << b.to_string();
        EXPECT_TRUE(check_distinct(a, b, *c));
        if (!(detail::alexander_factors(a) != detail::alexander_factors(b))) {
            // Same Alexander factors, so the mirror flags differ and the signature decides.
            EXPECT_EQ(c->kind, DistinctnessCertificate::Kind::signature);
        }
    }
    const auto c = certify_distinct(connected_sum(K(3), M(3)), FormalKnot());
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->kind, DistinctnessCertificate::Kind::alexander);
}

TEST(Detour, ChooseDetourExamples) {
    EXPECT_EQ(choose_detour({K(3)}), 5);
    EXPECT_EQ(choose_detour({connected_sum(K(3), K(5))}), 17);
    EXPECT_EQ(choose_detour({}), 3);
    EXPECT_EQ(choose_detour({FormalKnot()}), 3);
}

TEST(Detour, BuildAndVerify) {
    const std::vector<FormalKnot> path{FormalKnot(), K(3), connected_sum(K(3), K(5))};
    const std::vector<FormalKnot> forbidden{K(5), connected_sum(M(3), K(7))};
    const DetourPlan plan = build_detour(path, forbidden);
    EXPECT_EQ(plan.detour_p, 23);
    ASSERT_EQ(plan.detoured_path.size(), 5U);
    EXPECT_EQ(plan.detoured_path[1], K(23));
    EXPECT_TRUE(verify_detour(plan));
    auto broken = plan;
    broken.detoured_path[2] = K(5);
    EXPECT_FALSE(verify_detour(broken));
    broken = plan;
    broken.detoured_path.pop_back();
    EXPECT_FALSE(verify_detour(broken));
    EXPECT_THROW(build_detour({K(5)}, {K(5)}), DomainError);
    EXPECT_THROW(build_detour({}, {}), DomainError);
}

TEST(Detour, RandomInstances) {
    Gen g(62);
    for (int i = 0; i < 100; ++i) {
        std::vector<FormalKnot> forbidden;
        const long nf = g.uniform(0, 8);
        for (long j = 0; j < nf; ++j) forbidden.push_back(g.knot(3, 21));
        std::vector<FormalKnot> path;
        const long np = g.uniform(1, 6);
        for (long j = 0; j < np; ++j) path.push_back(g.knot(3, 21));
        const bool endpoint_forbidden = std::any_of(forbidden.begin(), forbidden.end(), [&](const FormalKnot& f) {
            return f == path.front() || f == path.back();
        });
        if (endpoint_forbidden) {
            EXPECT_THROW(build_detour(path, forbidden), DomainError);
            continue;
        }
        const DetourPlan plan = build_detour(path, forbidden);
        const DetourReport report = check_detour(plan);
        EXPECT_TRUE(report.ok) << (report.issues.empty() ? "" : report.issues.front());
        EXPECT_EQ(report.checks.size(), plan.detoured_path.size() * forbidden.size());
    }
}
