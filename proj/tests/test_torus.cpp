#include <gtest/gtest.h>

#include <set>

#include "gbt/singularity.hpp"

using namespace gbt;

TEST(TorsionPoint, ReducesModuloLevel) {
    TorsionPoint p(5, -1, 4);
    EXPECT_EQ(p.p, 1);
    EXPECT_EQ(p.q, 3);
    EXPECT_EQ(TorsionPoint(2, 0, 4), TorsionPoint(1, 0, 2));
    EXPECT_EQ(TorsionPoint(2, 2, 4).order(), 2);
    EXPECT_EQ(TorsionPoint(1, 2, 4).str(), "1/4+tau/2");
    EXPECT_THROW(TorsionPoint(0, 0, 0), ContractViolation);
}

TEST(TorsionPoint, AdditionAcrossLevels) {
    TorsionPoint s = TorsionPoint(1, 0, 4) + TorsionPoint(0, 1, 2);
    EXPECT_EQ(s, TorsionPoint(1, 2, 4));
    EXPECT_EQ(-TorsionPoint(1, 3, 4), TorsionPoint(3, 1, 4));
    EXPECT_TRUE(TorsionPoint(2, 0, 4).is_two_torsion());
    EXPECT_FALSE(TorsionPoint(1, 0, 4).is_two_torsion());
}

TEST(GroupElement, ParseAndXor) {
    GroupElement g = GroupElement::parse("000000100");
    GroupElement h = GroupElement::parse("000100000");
    EXPECT_EQ((g + h).str(), GroupElement::parse("000100100").str());
    EXPECT_TRUE((g + g).is_identity());
    EXPECT_THROW(GroupElement::parse("0001"), Error);
    EXPECT_THROW(GroupElement::parse("00000010x"), Error);
}

TEST(Groups, Orders) {
    EXPECT_EQ(groups::G0().elements().size(), 64u);
    for (int j = 1; j <= 4; ++j) {
        EXPECT_EQ(groups::GrpG(j).elements().size(), 8u) << j;
        EXPECT_TRUE(groups::GrpG(j).is_subgroup_of(groups::G0()));
    }
    EXPECT_TRUE(groups::GrpG(1).is_subgroup_of(groups::G1prime()));
    EXPECT_TRUE(groups::GrpG(2).is_subgroup_of(groups::G1()));
}

// Brute force over all 4096 quarter-torsion triples: an element fixes a
// point of T iff some triple is fixed.
TEST(FixedLoci, BruteForceAgreesWithFactorFormula) {
    const auto& pts = quarter_torsion_triples();
    std::set<std::string> brute;
    const Subgroup G0 = groups::G0();
    for (GroupElement g : G0.elements()) {
        if (g.is_identity()) continue;
        for (const auto& z : pts)
            if (g.act(z) == z) {
                brute.insert(g.str());
                break;
            }
    }
    std::set<std::string> formula;
    for (const auto& [g, t] : enumerate_fixing_elements(groups::G0())) formula.insert(g.str());
    EXPECT_EQ(brute, formula);
    EXPECT_EQ(formula.size(), 17u);
}

TEST(FixedLoci, DimensionCountsByBruteForce) {
    // A factor is fixed pointwise iff all 16 quarter-torsion points are fixed.
    std::map<int, int> by_dim;
    for (GroupElement g : table1()) {
        int whole = 0;
        for (int j = 0; j < 3; ++j) {
            int fixed = 0;
            for (const auto& p : all_points(4)) fixed += g.code(j).act(p) == p;
            whole += fixed == 16;
        }
        ++by_dim[whole];
        EXPECT_EQ(fixed_locus_on_T(g).dimension(), whole) << g.str();
    }
    EXPECT_EQ(by_dim[2], 3);
    EXPECT_EQ(by_dim[1], 6);
    EXPECT_EQ(by_dim[0], 8);
}

TEST(FixedLoci, PointTypeElementsFix64Points) {
    for (GroupElement g : table1())
        if (fixed_locus_on_T(g).dimension() == 0) {
            EXPECT_EQ(fixed_locus_on_T(g).points().size(), 64u) << g.str();
        }
}

TEST(Groups, G3G4HaveNoPositiveDimensionalFixedLoci) {
    for (int j : {3, 4}) {
        const Subgroup G = groups::GrpG(j);
        for (GroupElement g : G.elements()) {
            if (g.is_identity()) continue;
            auto t = fixed_locus_on_T(g);
            EXPECT_TRUE(t.empty() || t.dimension() == 0) << g.str();
        }
    }
}
