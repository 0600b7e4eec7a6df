#include "semiaudit/cft/cft.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace semiaudit;

namespace {

const FixtureSet& fixtures()
{
    static FixtureSet s = load_fixtures(SEMIAUDIT_DEFAULT_FIXTURES);
    return s;
}

const std::vector<unsigned long> kCandidates5{2, 3, 6, 12, 18, 24, 48, 576};
const std::vector<unsigned long> kCandidates3{2, 5, 10, 20};

} // namespace

TEST(Fixtures, AllValidate)
{
    EXPECT_EQ(fixtures().fields.size(), 9u);
    for (auto& fx : fixtures().fields) {
        auto v = validate_fixture(fx);
        EXPECT_EQ(v.status, Status::Pass) << v.to_json().dump(2);
    }
}

TEST(Fixtures, ParseRequiresHSource)
{
    Json j = Json::parse(R"({"label": "x", "poly": ["-2", "0", "1"], "h": 1, "units": [], "primes": [],
                             "conductor": {"prime_indices": [], "exponent": 1}})");
    EXPECT_THROW(parse_fixture(j), std::exception);
    EXPECT_THROW(load_fixtures("/nonexistent/fixtures.json"), std::exception);
}

TEST(Fixtures, ClaimedRamification)
{
    // x^2 - x - 1 at 5: (x - 3)^2 with f(3) = 5
    EXPECT_EQ(claimed_ramification(ZPoly{-1, -1, 1}, 5, 3), 2u);
    EXPECT_EQ(claimed_ramification(cyclotomic(5), 5, 1), 4u);
    EXPECT_EQ(claimed_ramification(cyclotomic(5), 11, 3), 1u);
    // x^2 + 4 at 2: f(0) = 4 has valuation 2, so no claim beyond 1
    EXPECT_EQ(claimed_ramification(ZPoly{4, 0, 1}, 2, 0), 1u);
}

TEST(Kummer, CandidateSets)
{
    auto v = kummer_candidates_check();
    EXPECT_EQ(v.status, Status::Pass) << v.to_json().dump(2);
    std::vector<unsigned long> pass5, pass3;
    for (auto m : kCandidates5)
        if (unramified_criterion(BigInt(m), 5))
            pass5.push_back(m);
    for (auto m : kCandidates3)
        if (unramified_criterion(BigInt(m), 3))
            pass3.push_back(m);
    // 24 = 2^3 3 ~ 18^3 and 576 = 2^6 3^2 ~ 18: one class
    EXPECT_EQ(pass5, (std::vector<unsigned long>{18, 24, 576}));
    for (auto m : pass5)
        EXPECT_TRUE(kummer_class_equiv(Rat(BigInt(m)), 18, 5).has_value());
    EXPECT_EQ(pass3, (std::vector<unsigned long>{10}));
}

// the criterion depends only on the class of m modulo ell-th powers prime to ell
TEST(Kummer, CriterionIsClassInvariant)
{
    std::mt19937 rng(17);
    for (auto [ell, cands] : {std::pair{5ul, kCandidates5}, std::pair{3ul, kCandidates3}}) {
        for (auto m : cands) {
            bool base = unramified_criterion(BigInt(m), ell);
            for (int it = 0; it < 50; ++it) {
                BigInt r;
                do
                    r = 1 + rng() % 97;
                while (r % ell == 0);
                EXPECT_EQ(unramified_criterion(BigInt(m) * ipow(r, ell), ell), base) << m;
            }
            for (unsigned long j = 1; j < ell; ++j)
                EXPECT_EQ(unramified_criterion(ipow(BigInt(m), j), ell), base) << m << "^" << j;
        }
    }
    EXPECT_THROW(unramified_criterion(BigInt(10), 5), std::exception);
}

TEST(Kummer, Lines)
{
    auto l5 = kummer_lines({2, 3}, 5);
    EXPECT_EQ(l5.size(), 6u);
    auto l3 = kummer_lines({2, 5}, 3);
    EXPECT_EQ(l3.size(), 4u);
    std::set<std::string> vals;
    for (auto& l : l3)
        vals.insert(l.value.get_str());
    // one representative per line, first exponent normalized to 1: 20 ~ 50
    EXPECT_EQ(vals, (std::set<std::string>{"2", "5", "10", "50"}));
}

TEST(Residues, GroupOrders)
{
    auto& q5 = fixtures().get("Q(zeta5)");
    auto g1 = residue_unit_group(q5, {0}, 1);
    EXPECT_EQ(g1.order(), 4);
    auto g2 = residue_unit_group(q5, {0}, 2);
    EXPECT_EQ(g2.order(), 20);
    EXPECT_EQ(g2.invariant_factors(), (std::vector<long>{20}));
    EXPECT_EQ(primitive_root(7), 3u);
    EXPECT_EQ(primitive_root(3), 2u);
}

TEST(Residues, LatticeIndex)
{
    // <(1,1), (0,2)> in Z/2 x Z/4 has order 4
    EXPECT_EQ(subgroup_order({{1, 1}, {0, 2}}, {2, 4}), 4);
    EXPECT_EQ(subgroup_order({{1, 0}, {0, 1}}, {2, 4}), 8);
    EXPECT_EQ(subgroup_order({}, {3, 3}), 1);
    EXPECT_EQ(subgroup_order({{1, 1, 1}, {1, 0, 0}, {0, 1, 1}}, {2, 2, 2}), 4);
    EXPECT_EQ(subgroup_order({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, {2, 2, 2}), 8);
}

// golden ratio maps to -2 at the prime above 5
TEST(UnitImages, GoldenRatioAt5)
{
    auto v = lemma34_verify(fixtures());
    EXPECT_EQ(v.status, Status::Pass) << v.to_json().dump(2);
}

TEST(UnitImages, Order8InF3Cubed)
{
    auto& k = fixtures().get("Q(sqrt-3,10^(1/3))");
    auto img = unit_image_subgroup(k, {0, 1, 2}, 1);
    EXPECT_EQ(img.group.order(), 8);
    EXPECT_EQ(img.order, 8);
    EXPECT_EQ(img.index, 1);
    auto v = lemma44_verify(fixtures());
    EXPECT_EQ(v.status, Status::ErratumNoted) << v.to_json().dump(2);
}

// adding generators never shrinks the image; adding a product u*w changes nothing
TEST(UnitImages, MonotoneAndProductInvariant)
{
    for (auto& fx : fixtures().fields) {
        auto all = fixture_units(fx);
        std::vector<std::size_t> idx(fx.primes.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        if (idx.empty())
            continue;
        auto g = residue_unit_group(fx, idx, 1);
        BigInt prev = 1;
        std::vector<NamedElement> acc;
        for (auto& e : all) {
            acc.push_back(e);
            auto img = unit_image(g, acc);
            EXPECT_GE(img.order, prev) << fx.label;
            EXPECT_EQ(g.order() % img.order, 0) << fx.label;
            prev = img.order;
        }
        if (all.size() >= 2) {
            auto with = all;
            with.push_back({"uw", all[0].value * all[all.size() - 1].value});
            EXPECT_EQ(unit_image(g, with).order, unit_image(g, all).order) << fx.label;
        }
    }
}

TEST(Splitting, NormConsistentWhereConclusive)
{
    int conclusive = 0;
    for (auto& fx : fixtures().fields)
        for (std::uint64_t p : {2u, 3u, 5u}) {
            auto r = split_prime(fx.field->poly(), p);
            if (!r.conclusive) {
                EXPECT_EQ(splitting_check(fx, p).status, Status::Inconclusive);
                continue;
            }
            ++conclusive;
            EXPECT_TRUE(r.norm_consistent()) << fx.label << " at " << p;
            std::size_t s = 0;
            for (auto& [ef, c] : r.shape())
                s += ef.first * ef.second * c;
            EXPECT_EQ(s, fx.degree());
            EXPECT_EQ(splitting_check(fx, p).status, Status::Pass) << fx.label << " at " << p;
        }
    EXPECT_GT(conclusive, 9);
}

TEST(Splitting, FrozenShapes)
{
    // 5 is totally ramified in Q(zeta5); 11 splits completely; 2 is inert
    auto& q5 = fixtures().get("Q(zeta5)");
    EXPECT_EQ(split_prime(q5.field->poly(), 5).shape(), (SplittingShape{{{4, 1}, 1}}));
    EXPECT_EQ(split_prime(q5.field->poly(), 11).shape(), (SplittingShape{{{1, 1}, 4}}));
    EXPECT_EQ(split_prime(q5.field->poly(), 2).shape(), (SplittingShape{{{1, 4}, 1}}));
}

TEST(Table, RootDiscriminants)
{
    for (auto& row : printed_table())
        EXPECT_EQ(kummer_root_disc(row.ell, row.radicands), row.printed_delta) << row.label;
}

TEST(Table, ReplicatesWithoutFail)
{
    auto rows = table_replicate(fixtures());
    EXPECT_EQ(rows.size(), 7u);
    for (auto& v : rows)
        EXPECT_TRUE(v.status == Status::Pass || v.status == Status::FixtureConditional) << v.to_json().dump(2);
}

TEST(Table, RayClassCompare)
{
    RayClassResult r;
    r.h = 2;
    r.image.index = 5;
    EXPECT_EQ(r.compare(10), Status::FixtureConditional);
    EXPECT_EQ(r.compare(3), Status::Fail);
    r.exact = true;
    r.image.index = 1;
    EXPECT_EQ(r.compare(2), Status::Pass);
    EXPECT_EQ(r.compare(4), Status::Fail);
    r.h.reset();
    EXPECT_EQ(r.compare(4), Status::FixtureConditional);
}

TEST(Suite, NoFailures)
{
    for (auto& v : cft_suite(fixtures()))
        EXPECT_NE(v.status, Status::Fail) << v.to_json().dump(2);
}
