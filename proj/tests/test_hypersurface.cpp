#include <gtest/gtest.h>

#include "gbt/acceptance.hpp"

using namespace gbt;

namespace {

Locus on_X(const Family& f, const char* bits) { return fixed_locus_on_X(f, GroupElement::parse(bits)).locus; }

}  // namespace

TEST(Family, CoefficientsOfTheThreeFamilies) {
    Family nu = Family::make(FamilyKind::Nu);
    EXPECT_EQ(nu.coef(0, 0, 0), nu1());
    EXPECT_EQ(nu.coef(1, 1, 1), nu1() * b(1) * b(2) * b(3));
    EXPECT_EQ(nu.coef(0, 1, 1), nu2() * b(2) * b(3));
    EXPECT_EQ(nu.coef(1, 0, 0), nu2() * b(1));
    Family mu = Family::make(FamilyKind::Mu);
    EXPECT_EQ(mu.coef(0, 0, 0), LaurentPoly(1));
    EXPECT_EQ(mu.coef(1, 1, 1), -gbt::mu());
    Family bf = Family::make(FamilyKind::B);
    EXPECT_EQ(bf.coef(1, 1, 1), -(b(1) * b(2) * b(3)));
}

// Incidence at the origin: all L-values are 1, so the equation is the sum of
// the coefficients.
TEST(Family, IncidenceAtOrigin) {
    Family mu = Family::make(FamilyKind::Mu);
    Triple o{TorsionPoint(0, 0, 4), TorsionPoint(0, 0, 4), TorsionPoint(0, 0, 4)};
    LaurentPoly sum;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) sum = sum + mu.coef(i, j, k);
    EXPECT_EQ(mu.evaluate(o), sum);
    Condition c = mu.solve(sum);
    ASSERT_EQ(c.kind, Condition::Kind::ZeroIff);
    EXPECT_TRUE(sum.substitute(mu.parameter_specialization(c.value)).is_zero());
}

TEST(FixedLociOnX, GenusFiveSurfaceElements) {
    Family nu = Family::make(FamilyKind::Nu);
    for (const char* g : {"000000100", "000100000", "100000000"}) {
        Locus l = on_X(nu, g);
        EXPECT_EQ(l.genus5(), 4) << g;
        EXPECT_EQ(l.points(), 0) << g;
    }
}

TEST(FixedLociOnX, NuPointTypeCellsIndependentOfParameter) {
    for (const char* spec : {"", "nu=(b1:1)", "nu=(1:-b1)", "nu=(b2:b3)"}) {
        Family f = Family::make(FamilyKind::Nu, *spec ? parse_specialization(spec) : Specialization{});
        EXPECT_EQ(on_X(f, "010010010").points(), 32) << spec;
        EXPECT_EQ(on_X(f, "010111111").points(), 32) << spec;
    }
}

TEST(FixedLociOnX, BSingularNodesOnCurveTypeElements) {
    Family f = Family::make(FamilyKind::B, parse_specialization("b1*b2*b3=1"));
    for (const char* g : {"000100100", "100000100", "100100000"}) {
        Locus l = on_X(f, g);
        EXPECT_EQ(l.points(), 16) << g;
        EXPECT_EQ(l.nodes(), 8) << g;
    }
}

// Each elliptic component over a point-slot pair must satisfy the equation
// identically in the free slot, which is checked directly.
TEST(FixedLociOnX, EllipticComponentsLieOnX) {
    Family mu = Family::make(FamilyKind::Mu);
    Locus l = on_X(mu, "000001001");
    ASSERT_EQ(l.elliptic(), 8);
    for (const auto& c : l.components) {
        if (c.type != Component::Type::Elliptic) continue;
        int free = -1;
        for (int j = 0; j < 3; ++j)
            if (c.slots[j].kind == Slot::Kind::Free) free = j;
        ASSERT_GE(free, 0);
        for (const auto& p : all_points(4)) {
            Triple z;
            bool ok = true;
            for (int j = 0; j < 3; ++j) {
                if (j == free)
                    z[j] = p;
                else if (c.slots[j].kind == Slot::Kind::At)
                    z[j] = c.slots[j].point;
                else
                    ok = false;
            }
            if (!ok) continue;
            EXPECT_EQ(mu.solve(mu.evaluate(z)).kind, Condition::Kind::IdenticallyZero) << str(z);
        }
    }
}

TEST(FixedLociOnX, GammaCurvesThroughNodes) {
    Family f = Family::make(FamilyKind::Nu, parse_specialization("nu=(b1:1)"));
    Locus l = on_X(f, "100000000");
    EXPECT_EQ(l.genus5(), 2);
    EXPECT_EQ(l.elliptic(), 8);
    auto nodes = singular_points(f);
    ASSERT_EQ(nodes.size(), 8u);
    for (const auto& c : l.components)
        if (c.type == Component::Type::Elliptic) {
            int k = 0;
            for (const auto& z : nodes) k += detail::contains(f, c, z);
            EXPECT_EQ(k, 2);
        }
}

TEST(FixedLociOnX, RejectsElementsWithoutFixedPoints) {
    Family f = Family::make(FamilyKind::B);
    EXPECT_THROW(fixed_locus_on_X(f, GroupElement::parse("110000000")), ContractViolation);
}

TEST(FixedLociOnX, ReferenceCells) {
    acceptance::Result r;
    EXPECT_TRUE(acceptance::detail::check_cells(Family::make(FamilyKind::Mu), acceptance::reference::mu_generic(), "mu", r));
    EXPECT_TRUE(acceptance::detail::check_cells(Family::make(FamilyKind::B), acceptance::reference::b_generic(), "b", r));
    EXPECT_TRUE(acceptance::detail::check_cells(Family::make(FamilyKind::Nu), acceptance::reference::nu_generic(), "nu", r));
    for (const auto& d : r.details) ADD_FAILURE() << d;
}
