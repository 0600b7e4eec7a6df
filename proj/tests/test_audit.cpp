#include "semiaudit/audit/audit.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace semiaudit;

namespace {

AuditConfig config(int n)
{
    AuditConfig c;
    c.N = n;
    c.fixtures_path = SEMIAUDIT_DEFAULT_FIXTURES;
    return c;
}

std::map<std::string, Status> statuses(const AuditReport& r)
{
    std::map<std::string, Status> m;
    for (auto& v : r.claims)
        m[v.id] = v.status;
    return m;
}

} // namespace

TEST(Verdict, CombineIsWorstOf)
{
    EXPECT_EQ(combine(Status::Pass, Status::Fail), Status::Fail);
    EXPECT_EQ(combine(Status::FixtureConditional, Status::Inconclusive), Status::Inconclusive);
    EXPECT_EQ(combine(Status::Assumed, Status::Pass), Status::Assumed);
    EXPECT_EQ(combine(Status::ErratumNoted, Status::Pass), Status::ErratumNoted);
    for (auto a : {Status::Pass, Status::Fail, Status::FixtureConditional, Status::Assumed, Status::ErratumNoted,
                   Status::Inconclusive})
        for (auto b : {Status::Pass, Status::Fail, Status::FixtureConditional, Status::Assumed, Status::ErratumNoted,
                       Status::Inconclusive})
            EXPECT_EQ(combine(a, b), combine(b, a));
}

TEST(Report, ExitCodes)
{
    AuditReport r;
    Verdict v;
    v.id = "a";
    r.add(v);
    EXPECT_EQ(r.exit_code(), 0);
    v.id = "b";
    v.status = Status::ErratumNoted;
    r.add(v);
    EXPECT_EQ(r.exit_code(), 0);
    v.id = "c";
    v.status = Status::Inconclusive;
    r.add(v);
    EXPECT_EQ(r.exit_code(), 10);
    v.id = "d";
    v.status = Status::Fail;
    r.add(v);
    EXPECT_EQ(r.exit_code(), 20);
    EXPECT_THROW(r.add(v), std::exception);
}

TEST(Audit, SixIsConditional)
{
    auto r = run_audit(config(6));
    EXPECT_EQ(r.exit_code(), 10);
    auto s = statuses(r);
    for (const char* id : {"fontaine-cap", "degree-bound", "root-disc-K", "lemma33", "lemma34", "lemma35", "lemma37",
                           "kummer-criterion", "lemma24", "weil", "scenario-6-toric-d1", "scenario-6-mixed-d2"})
        EXPECT_EQ(s.at(id), Status::Pass) << id;
    EXPECT_EQ(s.at("lemma32"), Status::ErratumNoted);
    EXPECT_EQ(s.at("order125"), Status::ErratumNoted);
    EXPECT_EQ(s.at("display-5-in-E"), Status::ErratumNoted);
    EXPECT_EQ(s.at("structural-assumptions"), Status::Assumed);
    for (auto& [id, st] : s)
        EXPECT_NE(st, Status::Fail) << id;
}

TEST(Audit, TenIsConditional)
{
    auto r = run_audit(config(10));
    EXPECT_EQ(r.exit_code(), 10);
    auto s = statuses(r);
    for (const char* id : {"fontaine-cap", "degree-bound", "lemma43", "lemma45", "order12", "order27", "sublemma2",
                           "kummer-criterion", "weil", "scenario-10-toric-d1", "scenario-10-mixed-d1"})
        EXPECT_EQ(s.at(id), Status::Pass) << id;
    EXPECT_EQ(s.at("lemma44"), Status::ErratumNoted);
    EXPECT_EQ(s.at("thm41-text"), Status::ErratumNoted);
    for (auto& [id, st] : s)
        EXPECT_NE(st, Status::Fail) << id;
}

TEST(Audit, WithoutGrhStopsAtDegreeBound)
{
    auto c = config(6);
    c.grh = false;
    auto r = run_audit(c);
    EXPECT_EQ(r.exit_code(), 20);
    ASSERT_FALSE(r.claims.empty());
    EXPECT_EQ(r.claims.back().id, "degree-bound");
    EXPECT_EQ(r.claims.back().status, Status::Fail);
}

TEST(Audit, FrozenQuantities)
{
    auto r = run_audit(config(10));
    for (auto& v : r.claims) {
        if (v.id == "lemma43")
            EXPECT_EQ(v.quantities["delta_L_strict_upper"]["monomial"], "2^(2/3)*3^(4/3)*5^(2/3)");
        if (v.id == "lemma45") {
            EXPECT_EQ(v.quantities["norm_window"]["min_exponent"], 66);
            EXPECT_EQ(v.quantities["norm_window"]["max_exponent"], 69);
        }
        if (v.id == "degree-bound")
            EXPECT_EQ(v.summary, "[L:Q] < 280, [L:K] <= 15");
    }
    auto r6 = run_audit(config(6));
    for (auto& v : r6.claims)
        if (v.id == "lemma32") {
            EXPECT_EQ(v.quantities["delta_L_strict_upper"]["monomial"], "2^(4/5)*3^(4/5)*5^(6/5)");
            EXPECT_EQ(v.quantities["printed_decimal_rule"], "truncated");
        }
}

TEST(Audit, ReportIsByteIdentical)
{
    for (int n : {6, 10}) {
        auto a = run_audit(config(n)).to_json().dump(2);
        auto b = run_audit(config(n)).to_json().dump(2);
        EXPECT_EQ(a, b);
    }
}

TEST(Audit, DigestTracksInputs)
{
    auto a = run_audit(config(6));
    auto dir = std::filesystem::temp_directory_path() / "semiaudit_test_odlyzko";
    std::filesystem::create_directories(dir);
    auto path = (dir / "extra.txt").string();
    std::ofstream(path) << "500 26.5\n";
    auto c = config(6);
    c.odlyzko_path = path;
    auto b = run_audit(c);
    EXPECT_NE(a.digest, b.digest);
    EXPECT_EQ(b.exit_code(), 10);
}

TEST(Audit, MissingFixturesAreConditional)
{
    auto c = config(10);
    c.fixtures_path = "/nonexistent/fixtures.json";
    auto r = run_audit(c);
    EXPECT_EQ(r.exit_code(), 10);
    auto s = statuses(r);
    EXPECT_EQ(s.at("lemma44"), Status::FixtureConditional);
    EXPECT_EQ(s.at("lemma43"), Status::Pass);
}

TEST(Audit, MalformedInputsAreConfigErrors)
{
    auto dir = std::filesystem::temp_directory_path() / "semiaudit_test_bad";
    std::filesystem::create_directories(dir);
    auto fx = (dir / "fixtures.json").string();
    std::ofstream(fx) << "{ not json";
    auto c = config(6);
    c.fixtures_path = fx;
    EXPECT_THROW(run_audit(c), ConfigError);
    auto od = (dir / "odlyzko.txt").string();
    std::ofstream(od) << "126 20.221\n100 19\n";
    auto c2 = config(6);
    c2.odlyzko_path = od;
    EXPECT_THROW(run_audit(c2), ConfigError);
    auto c3 = config(7);
    EXPECT_THROW(run_audit(c3), std::exception);
}

TEST(Check, RegistryAndUnknownIds)
{
    auto& reg = check_registry();
    for (const char* id : {"sublemma2", "lemma33", "lemma35", "order125", "order27", "order12", "lemma45", "lemma32",
                           "lemma43", "lemma37", "fontaine", "degree-bound", "root-disc", "weil", "lemma24", "scenario",
                           "kummer", "table", "lemma34", "lemma44", "cft", "fixtures", "splitting", "thm41-text"})
        EXPECT_TRUE(reg.count(id)) << id;
    CheckOptions o;
    o.fixtures_path = SEMIAUDIT_DEFAULT_FIXTURES;
    EXPECT_THROW(run_check("no-such-claim", o), ConfigError);
    EXPECT_EQ(run_check("weil", o).exit_code(), 0);
    o.l = 3;
    o.q = 5;
    EXPECT_EQ(run_check("weil", o).exit_code(), 20);
}
