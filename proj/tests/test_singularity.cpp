#include <gtest/gtest.h>

#include "gbt/acceptance.hpp"

using namespace gbt;

TEST(Singularity, MuFamilySmoothAwayFromBadSet) {
    auto r = singular_locus(Family::make(FamilyKind::Mu), groups::GrpG(2));
    EXPECT_TRUE(r.generic_smooth);
    EXPECT_TRUE(r.bad.empty());
}

TEST(Singularity, NuNodesMatchClosedForm) {
    auto r = singular_locus(Family::make(FamilyKind::Nu), groups::GrpG(1));
    ASSERT_EQ(r.bad.size(), 4u);
    for (std::size_t i = 0; i < r.bad.size(); ++i) {
        EXPECT_TRUE(r.reverified[i]);
        const auto& ref = acceptance::reference::nu_nodes();
        auto it = std::find_if(ref.begin(), ref.end(), [&](const auto& n) { return *r.bad[i].value == n.value; });
        ASSERT_NE(it, ref.end()) << r.bad[i].str();
        auto pts = r.bad[i].points;
        std::sort(pts.begin(), pts.end());
        EXPECT_EQ(pts, acceptance::reference::expected_nu_nodes(*it));
    }
}

// Independent check of a node: the equation and all three partial
// derivatives vanish. At a 2-torsion coordinate L' = 0, elsewhere the
// partial is the linear form with that factor's pair swapped to (1, 0)/(0, 1).
TEST(Singularity, NodeConditionsByHand) {
    Family f = Family::make(FamilyKind::Nu, parse_specialization("nu=(b1:1)"));
    for (const auto& z : singular_points(f)) {
        EXPECT_TRUE(f.evaluate(z).is_zero()) << str(z);
        for (int j = 0; j < 3; ++j) {
            if (z[j].is_two_torsion()) continue;
            std::array<SymValue, 3> v{f.value(0, z[0]), f.value(1, z[1]), f.value(2, z[2])};
            v[j] = SymValue(LaurentPoly(1), LaurentPoly(0));
            LaurentPoly d0 = f.contract(v);
            v[j] = SymValue(LaurentPoly(0), LaurentPoly(1));
            LaurentPoly d1 = f.contract(v);
            EXPECT_TRUE(d0.is_zero() && d1.is_zero()) << str(z) << " factor " << j;
        }
    }
}

TEST(Singularity, BRelationsHaveEightNodesInF0) {
    auto r = singular_locus(Family::make(FamilyKind::B), groups::GrpG(3));
    ASSERT_EQ(r.bad.size(), 8u);
    std::vector<std::string> rels;
    for (std::size_t i = 0; i < r.bad.size(); ++i) {
        rels.push_back(r.bad[i].str());
        EXPECT_EQ(r.bad[i].points.size(), 8u);
        EXPECT_TRUE(std::all_of(r.bad[i].points.begin(), r.bad[i].points.end(), in_F0));
        EXPECT_TRUE(r.reverified[i]);
    }
    EXPECT_EQ(rels, acceptance::reference::b_relations());
}

TEST(Singularity, GenericNuIsSmooth) {
    Family f = Family::make(FamilyKind::Nu, parse_specialization("nu=(b2:b3)"));
    EXPECT_TRUE(singular_points(f).empty());
}

TEST(Freeness, Verdicts) {
    EXPECT_EQ(certify_free_action(Family::make(FamilyKind::Nu), groups::GrpG(1)).verdict,
              FreenessCertificate::Verdict::FreeIffAvoids);
    EXPECT_EQ(certify_free_action(Family::make(FamilyKind::Mu), groups::GrpG(2)).verdict,
              FreenessCertificate::Verdict::FreeIffAvoids);
    EXPECT_TRUE(certify_free_action(Family::make(FamilyKind::B), groups::GrpG(3)).free());
    EXPECT_TRUE(certify_free_action(Family::make(FamilyKind::B), groups::GrpG(4)).free());
    // G0 contains curve-type elements.
    EXPECT_EQ(certify_free_action(Family::make(FamilyKind::B), groups::G0()).verdict,
              FreenessCertificate::Verdict::NotFree);
}

TEST(Freeness, BadParameterPutsFixedPointOnX) {
    auto c = certify_free_action(Family::make(FamilyKind::Mu), groups::GrpG(2));
    ASSERT_FALSE(c.bad.values.empty());
    for (const auto& v : c.bad.values) {
        Family f = Family::make(FamilyKind::Mu, Family::make(FamilyKind::Mu).parameter_specialization(*v.value));
        EXPECT_EQ(certify_free_action(f, groups::GrpG(2)).verdict, FreenessCertificate::Verdict::NotFree) << v.str();
    }
}

TEST(Freeness, Criterion) { EXPECT_TRUE(acceptance::criterion4().pass); }
