#include <gtest/gtest.h>

#include "gbt/numeric.hpp"

using namespace gbt;
using namespace gbt::numeric;

TEST(NumericCurve, TwoTorsionValuesAndBranchRelation) {
    NumericCurve c = build_curve({0.1, 0.9});
    EXPECT_NEAR(std::abs(c.s - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(c.b * c.b - c.a), 0.0, 1e-10);
    auto L = [&](double p, double q) {
        Pair v = c.legendre(p + q * c.tau);
        return v.num / v.den;
    };
    EXPECT_NEAR(std::abs(L(0, 0) - 1.0), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(L(0.5, 0) + 1.0), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(L(0, 0.5) - c.a), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(L(0.25, 0)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(L(0.25, 0.25) - double(c.sign) * cplx(0, 1) * c.b), 0.0, 1e-9);
}

// L is even, invariant under the lattice, and L(z + 1/2) = -L(z).
TEST(NumericCurve, FunctionalEquations) {
    NumericCurve c = build_curve({-0.3, 1.1});
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 50; ++i) {
        cplx z = u(rng) + u(rng) * c.tau;
        Pair x = c.legendre(z);
        EXPECT_LT(projective_distance(x, c.legendre(-z)), 1e-9);
        EXPECT_LT(projective_distance(x, c.legendre(z + 1.0 + c.tau)), 1e-9);
        Pair h = c.legendre(z + 0.5);
        EXPECT_LT(projective_distance({-x.num, x.den}, h), 1e-9);
    }
}

TEST(NumericCurve, RejectsBadTau) {
    EXPECT_THROW(build_curve({0.0, -1.0}), ContractViolation);
    EXPECT_THROW(build_curve({0.0, 0.05}), IllConditioned);
}

TEST(Decide, AmbiguityBand) {
    const double tol = 1e-9;
    EXPECT_EQ(decide(1e-12, tol), Decision::Zero);
    EXPECT_EQ(decide(1e-8, tol), Decision::Inconclusive);
    EXPECT_EQ(decide(1e-3, tol), Decision::NonZero);
}

TEST(Oracle, RelationRealisedOnCurves) {
    std::mt19937_64 rng(11);
    Relation r{{1, -1, 1}, GaussianRational(-1)};
    Curves c = random_curves(rng, 1e-9, r);
    EXPECT_NEAR(std::abs(c[0].b / c[1].b * c[2].b + 1.0), 0.0, 1e-9);
}

TEST(Oracle, NodesAreNondegenerate) {
    std::mt19937_64 rng(5);
    Curves c = random_curves(rng, 1e-9);
    Family f = Family::make(FamilyKind::Nu, parse_specialization("nu=(-b1:1)"), convention_of(c));
    auto pts = singular_points(f);
    ASSERT_EQ(pts.size(), 8u);
    for (const auto& p : pts) {
        auto n = verify_node(c, f, p, {}, "nu");
        EXPECT_LT(n.gradient_norm, 1e-9);
        EXPECT_TRUE(n.nondegenerate) << str(p) << " " << n.hessian_conditioning;
    }
}

TEST(Oracle, SmallRunAgrees) {
    auto r = cross_check_symbolic(42, 3, {}, 4);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.errors.empty());
    EXPECT_GE(r.min_margin(), 6.0);
}

TEST(Oracle, PinnedTriple) {
    std::vector<std::array<cplx, 3>> pinned{{cplx(0.1, 0.8), cplx(-0.2, 1.0), cplx(0.3, 1.2)}};
    auto r = cross_check_symbolic(1, 0, {}, 4, 1, pinned);
    ASSERT_EQ(r.curves.size(), 1u);
    EXPECT_NEAR(r.curves[0][1].tau.real(), -0.2, 1e-15);
    EXPECT_TRUE(r.ok());
}
