#include <gtest/gtest.h>

#include "genusgate/prover.hpp"
#include "oracles.hpp"

using namespace genusgate;

namespace {

const FieldOutcome* find(const GlobalVerdict& gv, const FieldDatabase& db, const std::string& id) {
    for (const auto& o : gv.per_field)
        if (db.table.records[o.record].id() == id) return &o;
    return nullptr;
}

} // namespace

TEST(ProveGenus, Genus212IsRuledOut) {
    const auto& db = oracle::shipped_db();
    const GlobalVerdict gv = prove_genus(212, db);
    EXPECT_EQ(gv.status, GlobalStatus::AllRuledOut);
    EXPECT_EQ(exit_code(gv.status), 0);
    EXPECT_EQ(gv.cap.inequality_cap, 12u);
    EXPECT_EQ(gv.cap.refined_cap, std::optional<unsigned>(10));
    EXPECT_TRUE(gv.completeness_assumed);
    EXPECT_EQ(gv.per_field.size() + gv.excluded, db.fields.size());
    for (const auto& o : gv.per_field) {
        EXPECT_EQ(o.verdict.status, VerdictStatus::RuledOut) << db.table.records[o.record].id();
        EXPECT_TRUE(o.verdict.survivors.empty());
    }
    const auto* q = find(gv, db, "1:1");
    ASSERT_NE(q, nullptr);
    EXPECT_EQ(q->verdict.reason_chain(), "NoFactorization");
    // every higher-degree row is inside the bounds and considered
    for (const auto& r : db.table.records)
        if (r.degree >= 3) {
            EXPECT_NE(find(gv, db, r.id()), nullptr) << r.id();
        }
}

TEST(ProveGenus, Genus2HasRationalSurvivor) {
    const auto& db = oracle::shipped_db();
    const GlobalVerdict gv = prove_genus(2, db);
    EXPECT_EQ(gv.status, GlobalStatus::HasInconclusive);
    EXPECT_EQ(exit_code(gv.status), 1);
    const auto* q = find(gv, db, "1:1");
    ASSERT_NE(q, nullptr);
    ASSERT_EQ(q->verdict.status, VerdictStatus::Inconclusive);
    bool norm13 = false;
    for (const auto& c : q->verdict.survivors)
        for (const auto& s : c.shapes) norm13 |= s.norm() == 13;
    EXPECT_TRUE(norm13);
}

TEST(ProveGenus, DeterministicAcrossWorkerCounts) {
    const auto& db = oracle::shipped_db();
    for (long g : {2L, 212L, 61L}) {
        const std::string one = render_report(prove_genus(g, db, {1, default_enumeration_cap}), db);
        for (unsigned w : {2u, 3u, 8u}) EXPECT_EQ(render_report(prove_genus(g, db, {w, default_enumeration_cap}), db), one);
    }
}

TEST(ProveGenus, MissingOverrideMakesResultUnprocessable) {
    // drop the override of 13396: the prover must not report nonexistence
    std::istringstream in("#@complete-degrees 1\n1\t1\t0,1\t1/12\t\n");
    FieldDatabase db = load_database(in);
    const auto& r = oracle::shipped_db().table.records[oracle::field_index(3, 13396)];
    FieldRecord copy = r;
    copy.overrides.clear();
    db.table.lines.emplace_back(db.table.records.size());
    db.table.records.push_back(copy);
    db.fields.push_back(make_field(copy.poly, copy.disc, {}));
    const GlobalVerdict gv = prove_genus(212, db);
    EXPECT_EQ(gv.status, GlobalStatus::HasUnprocessable);
    EXPECT_EQ(exit_code(gv.status), 2);
    EXPECT_FALSE(gv.cap.refined_cap.has_value());
    const std::string report = render_report(gv, db);
    EXPECT_NE(report.find("3:13396\t211/3\t3\tUnprocessable\tNeedsOverride\t-"), std::string::npos) << report;
}

TEST(ProveGenus, SubsetStillRulesOutButWithoutCompleteness) {
    std::istringstream in("2\t5\t-1,-1,1\t1/60\t\n2\t8\t-2,0,1\t1/24\t\n");
    const FieldDatabase db = load_database(in);
    const GlobalVerdict gv = prove_genus(212, db);
    EXPECT_FALSE(gv.completeness_assumed);
    const std::string report = render_report(gv, db);
    EXPECT_NE(report.find("completeness=not-asserted"), std::string::npos);
    EXPECT_NE(report.find("listed fields only"), std::string::npos);
}

TEST(RenderReport, Layout) {
    const auto& db = oracle::shipped_db();
    const GlobalVerdict gv = prove_genus(212, db);
    const std::string report = render_report(gv, db);
    std::istringstream is(report);
    std::string l1, l2, l3, row;
    std::getline(is, l1);
    std::getline(is, l2);
    std::getline(is, l3);
    EXPECT_EQ(l1.rfind("# genusgate ", 0), 0u);
    EXPECT_NE(l1.find("\tgenus=212\tinequality_cap=12\trefined_cap=10\tcompleteness=assumed(degrees 1,2,11,12)"),
              std::string::npos);
    EXPECT_EQ(l2.rfind("# status=AllRuledOut", 0), 0u);
    EXPECT_EQ(l3, "field\tzeta\tT\tverdict\treasons\tsurvivors");
    std::size_t rows = 0;
    while (std::getline(is, row)) {
        ++rows;
        EXPECT_EQ(std::count(row.begin(), row.end(), '\t'), 5) << row;
    }
    EXPECT_EQ(rows, gv.per_field.size());
    EXPECT_THROW(prove_genus(1, db), error);
}
