#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace semiaudit;
using namespace semiaudit::galmod;

// delta = dim(kappa meet M2) + dim(kappa meet M1) - dim kappa, counted element by element
TEST(ComponentDelta, MatchesBruteForceCount)
{
    auto r = oracle::component_delta_run(500, 424242);
    EXPECT_EQ(r.instances, 500);
    EXPECT_EQ(r.mismatches, 0) << r.first_mismatch;
}

TEST(ComponentDelta, OracleSeesStageIncrements)
{
    std::mt19937 rng(1);
    int hits = 0;
    for (int it = 0; it < 100; ++it) {
        auto x = oracle::random_delta_instance(rng, 3);
        hits += oracle::brute_delta(x).stage;
    }
    EXPECT_GT(hits, 0);
}

TEST(ComponentDelta, KappaContainingM1)
{
    // kappa >= M1 gives delta = t + (d + a) - dim kappa = 2d - dim kappa
    std::mt19937 rng(5);
    for (int it = 0; it < 100; ++it) {
        int p = 5, d = 1 + static_cast<int>(rng() % 4), t = static_cast<int>(rng() % (d + 1));
        Subspace full = Subspace::full(p, 2 * d);
        Subspace m1 = oracle::random_subspace_of(rng, full, 2 * d - t);
        Subspace m2 = oracle::random_subspace_of(rng, m1, t);
        Filtration f(m2, m1, t, d - t);
        Subspace kappa = m1 + oracle::random_subspace_of(rng, full, static_cast<int>(rng() % 3));
        EXPECT_EQ(component_delta(kappa, f).delta, 2 * d - kappa.dim());
    }
}

TEST(Filtration, RejectsBadShapes)
{
    Subspace full = Subspace::full(5, 4);
    Subspace c01 = Subspace::coordinate(5, 4, 0, 1), c03 = Subspace::coordinate(5, 4, 0, 3);
    EXPECT_NO_THROW(Filtration(c01, c03, 1, 1));
    EXPECT_THROW(Filtration(c03, c01, 1, 1), std::invalid_argument);
    EXPECT_THROW(Filtration(Subspace::coordinate(5, 4, 3, 4), c03, 1, 1), std::invalid_argument);
    EXPECT_THROW(Filtration(c01, full, 1, 1), std::invalid_argument);
}

// 200 randomized instances of the two closure properties
TEST(Closure, RandomizedInstances)
{
    auto r = oracle::closure_run(200, 99);
    EXPECT_EQ(r.instances, 200);
    EXPECT_EQ(r.mismatches, 0) << r.first_mismatch;
}

TEST(Lemma24, ExhaustiveOverF5)
{
    auto r = oracle::lemma24_exhaustive(2);
    EXPECT_EQ(r.matrices, 5 + 625);
    // |GL_1(F5)| = 4, |GL_2(F5)| = 480
    EXPECT_EQ(r.invertible, 4 + 480);
    EXPECT_EQ(r.failures, 0);
}

TEST(Weil, FrozenComparisons)
{
    auto a = weil_compare(5, 4, 7);
    EXPECT_TRUE(a.violation);
    EXPECT_EQ(a.evidence["lhs"], "16");
    EXPECT_EQ(a.evidence["rhs"], "7");
    auto b = weil_compare(3, 4, 3);
    EXPECT_TRUE(b.violation);
    EXPECT_EQ(b.evidence["lhs"], "4");
    EXPECT_EQ(b.evidence["rhs"], "3");
    // 3 > 1 + sqrt 5 fails
    EXPECT_FALSE(weil_compare(3, 4, 5).violation);
    EXPECT_TRUE(weil_violation(5, 4, 7, 1));
    EXPECT_THROW(weil_violation(5, 4, 7, 0), std::invalid_argument);
    EXPECT_TRUE(exceeds_weil_bound(5, 2, 7, 1).first);   // 25 > 8 + 2 sqrt 7
    EXPECT_FALSE(exceeds_weil_bound(5, 1, 7, 1).first);
}

TEST(Weil, PointBoundAgreesWithFloat)
{
    for (unsigned long m = 1; m <= 12; ++m)
        for (unsigned long d = 1; d <= 3; ++d) {
            double lhs = std::pow(5.0, m), rhs = std::pow(1 + std::sqrt(7.0), 2.0 * d);
            EXPECT_EQ(exceeds_weil_bound(5, m, 7, d).first, lhs > rhs) << m << " " << d;
        }
}

TEST(PRank, Bounds)
{
    EXPECT_EQ(prank_bound(2, 2, 2).status, Status::Pass);
    EXPECT_TRUE(prank_bound(2, 2, 2).quantities["ordinary"].get<bool>());
    EXPECT_EQ(prank_bound(3, 2).status, Status::Fail);
}

namespace {

const nlohmann::ordered_json* find_step(const nlohmann::ordered_json& tr, const std::string& prefix)
{
    for (auto& s : tr["steps"])
        if (s["claim"].get<std::string>().rfind(prefix, 0) == 0)
            return &s;
    return nullptr;
}

} // namespace

TEST(Scenario, ToricTerminatesInWeil)
{
    for (auto [N, lhs, rhs] : {std::tuple{6, "16", "7"}, std::tuple{10, "4", "3"}}) {
        auto t = run_scenario(N, Branch::Toric, 1);
        EXPECT_EQ(t.terminal, "WEIL");
        EXPECT_FALSE(t.failed);
        auto j = t.to_json();
        auto* w = find_step(j, "ell^(4g)");
        ASSERT_NE(w, nullptr);
        EXPECT_EQ((*w)["result"]["lhs"], lhs);
        EXPECT_EQ((*w)["result"]["rhs"], rhs);
        EXPECT_EQ((*w)["verdict"], "PASS");
    }
}

TEST(Scenario, MixedTerminatesInBoundedPoints)
{
    auto t = run_scenario(6, Branch::Mixed, 2);
    EXPECT_EQ(t.terminal, "BOUNDED_POINTS");
    EXPECT_FALSE(t.failed);
    auto j = t.to_json();
    auto* s = find_step(j, "kernels kappa_n strictly increase");
    ASSERT_NE(s, nullptr);
    auto dims = (*s)["result"]["log_ell_order"];
    ASSERT_GE(dims.size(), 2u);
    for (std::size_t i = 1; i < dims.size(); ++i)
        EXPECT_LT(dims[i - 1].get<long>(), dims[i].get<long>());
    EXPECT_EQ(run_scenario(10, Branch::Mixed, 1).terminal, "BOUNDED_POINTS");
}

TEST(Scenario, TracesAreByteIdentical)
{
    for (int N : {6, 10})
        for (auto b : {Branch::Toric, Branch::Mixed})
            for (int d = 1; d <= 3; ++d) {
                auto x = run_scenario(N, b, d).to_json().dump();
                auto y = run_scenario(N, b, d).to_json().dump();
                EXPECT_EQ(x, y);
            }
}

TEST(Scenario, AllSmallDimensionsTerminate)
{
    for (int N : {6, 10})
        for (int d = 1; d <= 4; ++d) {
            EXPECT_EQ(run_scenario(N, Branch::Toric, d).terminal, "WEIL") << N << " d=" << d;
            EXPECT_EQ(run_scenario(N, Branch::Mixed, d).terminal, "BOUNDED_POINTS") << N << " d=" << d;
        }
    EXPECT_THROW(run_scenario(7, Branch::Toric, 1), std::invalid_argument);
    EXPECT_THROW(run_scenario(6, Branch::Toric, 0), std::invalid_argument);
}
