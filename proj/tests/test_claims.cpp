#include <gtest/gtest.h>

#include <set>

#include "tkk/claims.hpp"

using namespace tkk;

namespace {

const CheckResult* find_check(const ClaimResult& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST(Registry, HasTenClaimsInNumericOrder) {
    const auto& all = list_claims();
    ASSERT_EQ(all.size(), 10u);
    for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(all[i].id, "C" + std::to_string(i + 1));
        EXPECT_FALSE(all[i].title.empty());
        EXPECT_FALSE(all[i].anchor.empty());
    }
}

TEST(Registry, TierAndIdFilters) {
    for (const auto& c : list_claims(0)) EXPECT_EQ(c.tier, 0);
    auto t1 = list_claims(1);
    ASSERT_EQ(t1.size(), 1u);
    EXPECT_EQ(t1[0].id, "C7");
    EXPECT_EQ(list_claims(0).size() + t1.size() + list_claims(2).size(), 10u);
    EXPECT_EQ(list_claims(std::string("C5")).size(), 1u);
    EXPECT_TRUE(list_claims(std::string("C11")).empty());
    EXPECT_TRUE(list_claims(7).empty());
}

TEST(RunClaim, UnknownIdThrows) { EXPECT_THROW(run_claim("C99", {}), std::invalid_argument); }

TEST(RunClaim, TierOneClaimIsSkippedAtBudgetZero) {
    ClaimResult r = run_claim("C7", RunOptions{0, 0});
    EXPECT_EQ(r.status, Status::skipped);
    EXPECT_TRUE(r.checks.empty());
}

TEST(RunClaim, GradingShapesReportE7Dimensions) {
    ClaimResult r = run_claim("C1", RunOptions{0, 0});
    EXPECT_EQ(r.status, Status::pass);
    const CheckResult* e7 = find_check(r, "E7 grading");
    ASSERT_NE(e7, nullptr);
    EXPECT_EQ(e7->witness["dims"], ReportJson::parse("[1,32,67,32,1]"));
    const CheckResult* e8 = find_check(r, "E8 grading");
    ASSERT_NE(e8, nullptr);
    EXPECT_EQ(e8->status, Status::skipped);
}

TEST(RunClaim, CentralizerChainPayload) {
    ClaimResult r = run_claim("C5", RunOptions{0, 0});
    EXPECT_EQ(r.status, Status::pass);
    ASSERT_EQ(r.checks.size(), 1u);
    const ReportJson& w = r.checks[0].witness;
    EXPECT_EQ(w["E7"]["centralizer_dim"], 66);
    EXPECT_EQ(w["E7"]["type"], "D6");
    EXPECT_EQ(w["D6"]["centralizer_dim"], 31);
    EXPECT_EQ(w["D6"]["type"], "D4+A1");
    EXPECT_EQ(w["3A1"]["centralizer_dim"], 28);
    EXPECT_EQ(w["3A1"]["centralizer_type"], "D4");
}

TEST(RunClaim, IntersectionBoundAtTierOne) {
    ClaimResult r = run_claim("C7", RunOptions{1, 0});
    EXPECT_EQ(r.status, Status::pass);
    const CheckResult* eight = find_check(r, "dimension-8 conjugator");
    ASSERT_NE(eight, nullptr);
    EXPECT_EQ(eight->witness["meet_dim"], 8);
    const CheckResult* structure = find_check(r, "dimension-8 intersection structure");
    ASSERT_NE(structure, nullptr);
    EXPECT_EQ(structure->witness["tkk_type"], "D4");
    EXPECT_EQ(structure->witness["inder_derived_type"], "3A1");
}

TEST(ClaimRunner, FailuresCarryWitnesses) {
    ClaimRun run(RunOptions{0, 0});
    run.check("throws", 0, [](ReportJson&) -> bool { throw std::runtime_error("boom"); });
    run.check("false", 0, [](ReportJson& w) {
        w["value"] = 3;
        return false;
    });
    run.check("too slow", 1, [](ReportJson&) { return true; });
    auto checks = run.take();
    ASSERT_EQ(checks.size(), 3u);
    EXPECT_EQ(checks[0].status, Status::fail);
    EXPECT_EQ(checks[0].witness["error"], "boom");
    EXPECT_EQ(checks[1].status, Status::fail);
    EXPECT_EQ(checks[1].witness["value"], 3);
    EXPECT_EQ(checks[2].status, Status::skipped);
    EXPECT_TRUE(checks[2].witness.contains("reason"));
}

TEST(Report, EmptyResultsHaveHeaderAndEmptyArray) {
    ReportJson doc = ReportJson::parse(emit_report({}, ReportFormat::json, 0));
    EXPECT_EQ(doc["tool"], "tkkw");
    EXPECT_EQ(doc["version"], tool_version);
    EXPECT_TRUE(doc["claims"].is_array());
    EXPECT_TRUE(doc["claims"].empty());
}

TEST(Report, SinglePassEntry) {
    ClaimResult r;
    r.id = "C3";
    r.title = "t";
    r.status = Status::pass;
    ReportJson doc = ReportJson::parse(emit_report({r}, ReportFormat::json, 0));
    ASSERT_EQ(doc["claims"].size(), 1u);
    EXPECT_EQ(doc["claims"][0]["status"], "pass");
}

TEST(Report, EntriesSortedByNumericId) {
    std::vector<ClaimResult> results(3);
    results[0].id = "C10";
    results[1].id = "C2";
    results[2].id = "C1";
    results[1].status = Status::fail;
    ReportJson doc = ReportJson::parse(emit_report(results, ReportFormat::json, 0));
    ASSERT_EQ(doc["claims"].size(), 3u);
    EXPECT_EQ(doc["claims"][0]["id"], "C1");
    EXPECT_EQ(doc["claims"][1]["id"], "C2");
    EXPECT_EQ(doc["claims"][2]["id"], "C10");
    const std::string text = emit_report(results, ReportFormat::text, 0);
    EXPECT_LT(text.find("C1 "), text.find("C2 "));
    EXPECT_LT(text.find("C2 "), text.find("C10 "));
}

TEST(Report, RepeatedRunsAreByteIdentical) {
    for (const char* id : {"C5", "C10"}) {
        std::string a = emit_report({run_claim(id, RunOptions{0, 0})}, ReportFormat::json, 0);
        std::string b = emit_report({run_claim(id, RunOptions{0, 0})}, ReportFormat::json, 0);
        EXPECT_EQ(a, b) << id;
    }
}

TEST(Report, RuntimeIsNotEmitted) {
    ClaimResult r = run_claim("C10", RunOptions{0, 0});
    r.runtime_seconds = 123.5;
    EXPECT_EQ(emit_report({r}, ReportFormat::json, 0).find("123.5"), std::string::npos);
}
