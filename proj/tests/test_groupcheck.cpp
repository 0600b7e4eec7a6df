#include "semiaudit/groupcheck/lemmas.hpp"
#include "semiaudit/groupcheck/truncated.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace semiaudit;
using namespace semiaudit::groups;

TEST(Catalog, CountsMatchStandardTable)
{
    for (int n = 1; n <= 27; ++n)
        EXPECT_EQ(static_cast<int>(catalog(n).size()), standard_group_count(n)) << "order " << n;
    EXPECT_EQ(catalog(16).size(), 14u);
    EXPECT_EQ(catalog(24).size(), 15u);
    EXPECT_EQ(catalog(27).size(), 5u);
}

TEST(Catalog, PairwiseNonIsomorphic)
{
    for (int n : {8, 12, 16, 18, 20, 24, 27}) {
        auto& c = catalog(n);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                EXPECT_FALSE(isomorphic(c[i], c[j])) << c[i].label() << " ~ " << c[j].label();
    }
}

TEST(Automorphisms, FrozenOrders)
{
    EXPECT_EQ(automorphism_count(cyclic(5)), 4);
    EXPECT_EQ(automorphism_count(catalog_group(8, "Q8")), 24);
    EXPECT_EQ(automorphism_count(catalog_group(8, "D4")), 8);
    EXPECT_EQ(automorphism_count(catalog_group(12, "A4")), 24);
    EXPECT_EQ(automorphism_count(catalog_group(16, "C2xC2xC2xC2")), 20160);
    EXPECT_EQ(automorphism_count(catalog_group(18, "D9")), 54);
    EXPECT_EQ(automorphism_count(alternating4()), 24);
    EXPECT_EQ(automorphism_count(heisenberg(3)), 432);
}

// the generator-image search agrees with a permutation filter over all bijections
TEST(Automorphisms, MatchPermutationFilter)
{
    for (int n = 1; n <= 16; ++n)
        for (auto& g : catalog(n))
            EXPECT_EQ(automorphism_count(g), automorphism_count_by_permutations(g)) << g.label();
}

TEST(Automorphisms, AreHomomorphismsAndBijective)
{
    for (auto& g : catalog(12))
        for (auto& a : automorphisms(g)) {
            std::set<int> img(a.begin(), a.end());
            EXPECT_EQ(static_cast<int>(img.size()), g.order());
            for (int x = 0; x < g.order(); ++x)
                for (int y = 0; y < g.order(); ++y)
                    ASSERT_EQ(a[g.mul(x, y)], g.mul(a[x], a[y]));
        }
}

TEST(Structure, Abelianizations)
{
    EXPECT_EQ(abelianization(alternating4()), (std::vector<int>{3}));
    EXPECT_EQ(abelianization(symmetric(4)), (std::vector<int>{2}));
    EXPECT_EQ(abelianization(catalog_group(8, "Q8")), (std::vector<int>{2, 2}));
    EXPECT_EQ(abelian_invariants(direct_product(cyclic(4), cyclic(6))), (std::vector<int>{2, 12}));
    EXPECT_EQ(normal_subgroups(alternating4()).size(), 3u);
}

TEST(Lemmas, Lemma33)
{
    auto v = lemma33_verify();
    EXPECT_EQ(v.status, Status::Pass) << v.to_json().dump(2);
}

TEST(Lemmas, Lemma35AllGroups)
{
    auto v = lemma35_verify_all();
    EXPECT_EQ(v.status, Status::Pass) << v.to_json().dump(2);
}

TEST(Lemmas, Order27)
{
    auto v = order27_facts();
    EXPECT_EQ(v.status, Status::Pass) << v.to_json().dump(2);
}

TEST(Lemmas, Order12)
{
    auto r = order12_check();
    EXPECT_EQ(r.verdict.status, Status::Pass);
    EXPECT_FALSE(r.a4_has_normal_index2);
    EXPECT_FALSE(r.a4_has_normal_sylow3);
}

TEST(Lemmas, Order125SurveyCountsFour)
{
    auto v = order125_survey();
    EXPECT_EQ(v.status, Status::ErratumNoted);
    EXPECT_EQ(v.quantities["surjecting_count"], 4) << v.to_json().dump(2);
    EXPECT_EQ(v.quantities["stated_count"], 3);
}

TEST(Sublemma2, SolutionSetIsZero)
{
    for (int k = 1; k <= 4; ++k) {
        auto s = sublemma2_solve(k);
        ASSERT_EQ(s.size(), 1u) << "k = " << k;
        EXPECT_TRUE(s[0].is_zero());
    }
    EXPECT_EQ(sublemma2_verify(3).status, Status::Pass);
    EXPECT_THROW(sublemma2_solve(5), std::invalid_argument);
}

TEST(Sublemma2, FrozenCubeSets)
{
    EXPECT_EQ(commutator_cube_set(1).size(), 1u);
    EXPECT_EQ(commutator_cube_set(2).size(), 3u);
    EXPECT_EQ(commutator_cube_set(3).size(), 9u);
    EXPECT_EQ(commutator_cube_set(4).size(), 9u);
}

// truncating a solution of level k+1 to level k gives a solution of level k
TEST(Sublemma2, MonotoneUnderTruncation)
{
    for (int k = 1; k < 4; ++k) {
        std::set<int> lower;
        for (auto& t : commutator_cube_set(k))
            lower.insert(t.index());
        for (auto& t : commutator_cube_set(k + 1)) {
            Trunc p;
            p.k = k;
            for (int i = 0; i < k; ++i)
                p.c[i] = t.c[i];
            EXPECT_TRUE(lower.count(p.index())) << t.str();
        }
    }
}
