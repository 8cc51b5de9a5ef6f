#include <gtest/gtest.h>

#include "gbt/acceptance.hpp"

using namespace gbt;

TEST(Properties, ActionIsInvolutiveAndAdditive) {
    std::mt19937_64 rng(2024);
    const Subgroup G0 = groups::G0();
    const auto& g0 = G0.elements();
    const auto& pts = quarter_torsion_triples();
    std::uniform_int_distribution<std::size_t> pg(0, g0.size() - 1), pp(0, pts.size() - 1);
    for (int i = 0; i < 200000; ++i) {
        GroupElement g = g0[pg(rng)], h = g0[pg(rng)];
        const Triple& z = pts[pp(rng)];
        ASSERT_EQ(g.act(g.act(z)), z);
        ASSERT_EQ(g.act(h.act(z)), (g + h).act(z));
    }
}

TEST(Properties, ActionPreservesEachFamily) {
    for (FamilyKind k : {FamilyKind::Nu, FamilyKind::Mu, FamilyKind::B}) {
        Family f = Family::make(k);
        Subgroup inv = InvolutionScheme::invariance_group(k);
        for (GroupElement g : inv.elements())
            for (std::size_t i = 0; i < quarter_torsion_triples().size(); i += 37) {
                const Triple& z = quarter_torsion_triples()[i];
                Condition a = f.solve(f.evaluate(z)), b = f.solve(f.evaluate(g.act(z)));
                ASSERT_EQ(a.kind, b.kind) << name(k) << " " << g.str() << " " << str(z);
                if (a.kind == Condition::Kind::ZeroIff) {
                    ASSERT_EQ(a.value, b.value);
                }
            }
    }
}

TEST(Properties, SingularityIsGroupInvariant) {
    Family f = Family::make(FamilyKind::B, parse_specialization("b1*b2^-1*b3=-1"));
    auto nodes = singular_points(f);
    std::set<Triple> s(nodes.begin(), nodes.end());
    const Subgroup G0 = groups::G0();
    for (GroupElement g : G0.elements())
        for (const auto& z : nodes) EXPECT_TRUE(s.count(g.act(z))) << g.str();
}

TEST(Properties, ConventionIndependence) {
    auto summary = [](const Convention& c) {
        std::string out;
        for (FamilyKind k : {FamilyKind::Nu, FamilyKind::Mu, FamilyKind::B}) {
            Family f = Family::make(k, {}, c);
            for (GroupElement g : which_elements_fix_on_X(f, InvolutionScheme::invariance_group(k)).generic)
                out += fixed_locus_on_X(f, g).locus.summary() + ";";
        }
        return out;
    };
    const std::string ref = summary(Convention{});
    for (int k = 1; k < 8; ++k) EXPECT_EQ(summary(Convention::from_index(k)), ref) << k;
}

TEST(Properties, HorikawaIdentity) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> kd(0, 6), xd(1, 8), nd(0, 8), pd(-30, 30);
    for (int it = 0; it < 50000; ++it) {
        HorikawaData h;
        h.k = 2 * kd(rng);
        h.KPDelta = pd(rng);
        for (int i = nd(rng); i > 0; --i) h.x.push_back(xd(rng));
        long long sxx = 0, sq = 0;
        for (long long x : h.x) sxx += x * (x - 1), sq += (x - 1) * (x - 1);
        h.Delta2 = -2 - h.KPDelta + sxx;
        h.KP2 = (6 - h.k + 2 * sq) / 2 - 2 * h.KPDelta - h.Delta2;
        ASSERT_EQ(h.eq_a_residual(), 0);
        ASSERT_EQ(h.eq_b_residual(), 0);
        ASSERT_EQ(h.eq_c_residual(), 0);
        // Perturbing K_P^2 alone breaks the first and third but not the second.
        h.KP2 += 1;
        ASSERT_NE(h.eq_a_residual(), 0);
        ASSERT_EQ(h.eq_b_residual(), 0);
        ASSERT_NE(h.eq_c_residual(), 0);
    }
}

TEST(Properties, DescentCountsAreDivisible) {
    for (int j = 1; j <= 4; ++j) {
        auto s = InvolutionScheme::standard(j);
        Family f = Family::make(s.family);
        for (const auto& [n, sigma] : s.sigmas()) {
            auto c = coset_fixed_loci(f, s.group, sigma);
            EXPECT_TRUE(c.disjoint) << j << " " << n;
            int pts = 0;
            for (const auto& x : c.loci) pts += x.locus.points();
            EXPECT_EQ(pts % 8, 0) << j << " " << n;
        }
    }
}

TEST(Properties, AllCriterionNine) { EXPECT_TRUE(acceptance::criterion9().pass); }
