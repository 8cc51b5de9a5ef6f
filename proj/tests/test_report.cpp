#include <gtest/gtest.h>

#include "gbt/report.hpp"

using namespace gbt;

TEST(Report, ByteStable) {
    auto a = report::bloch_doc(3, "both").to_json().dump(2);
    auto b = report::bloch_doc(3, "both").to_json().dump(2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(report::table1_doc().text, report::table1_doc().text);
}

TEST(Report, Envelope) {
    auto j = report::invariants_doc().to_json();
    EXPECT_EQ(j["schema"], "gbt-verify/report/v1");
    auto it = j.begin();
    EXPECT_EQ(it.key(), "schema");
    EXPECT_EQ((++it).key(), "command");
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["result"]["quotient_K2"], 6);
}

TEST(Report, FixedLociRows) {
    auto d = report::fixed_loci_doc(FamilyKind::B, "b1*b2*b3=1");
    EXPECT_TRUE(d.pass);
    int hits = 0;
    for (const auto& row : d.result["rows"])
        if (row["label"] == "g4" || row["label"] == "g5" || row["label"] == "g6") {
            EXPECT_EQ(row["locus"]["summary"], "16 pt, 8 nodes");
            ++hits;
        }
    EXPECT_EQ(hits, 3);
}

TEST(Report, ComponentSchemaFields) {
    auto d = report::fixed_loci_doc(FamilyKind::Mu, "");
    const auto& c = d.result["rows"][0]["locus"]["components"][0];
    for (const char* k : {"type", "fixed_coords", "l_values", "genus", "node"}) EXPECT_TRUE(c.contains(k)) << k;
}

TEST(Report, BlochVerdicts) {
    auto g2 = report::bloch_doc(2, "both");
    EXPECT_TRUE(g2.pass);
    EXPECT_NE(g2.text.find("Bloch holds"), std::string::npos);
    auto g1 = report::bloch_doc(1, "strict");
    EXPECT_FALSE(g1.pass);
    EXPECT_FALSE(g1.discrepancies.empty());
    EXPECT_TRUE(report::bloch_doc(1, "as-claimed").pass);
}

TEST(Report, FractionsAreReduced) {
    EXPECT_EQ(report::to_json(TorsionPoint(2, 0, 4)), report::json::array({"1/2", "0"}));
    EXPECT_EQ(report::to_json(TorsionPoint(1, 3, 4)), report::json::array({"1/4", "3/4"}));
}
