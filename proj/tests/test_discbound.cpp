#include "semiaudit/cft/cft.hpp"
#include "semiaudit/discbound/discbound.hpp"
#include "semiaudit/groupcheck/lemmas.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace semiaudit;

TEST(Fontaine, FrozenCaps)
{
    EXPECT_EQ(fontaine_cap(5, {2, 3}).str(), "2^(4/5)*3^(4/5)*5^(5/4)");
    EXPECT_EQ(fontaine_cap(3, {2, 5}).str(), "2^(2/3)*3^(3/2)*5^(2/3)");
    EXPECT_EQ(exact_compare(fontaine_cap(5, {2, 3}), make_rat(31645, 1000)), Ordering::Less);
    EXPECT_EQ(exact_compare(fontaine_cap(3, {2, 5}), make_rat(24258, 1000)), Ordering::Less);
    EXPECT_THROW(fontaine_cap(5, {5}), std::invalid_argument);
}

// adding a bad prime never shrinks the cap
TEST(Fontaine, MonotoneInBadSet)
{
    const std::vector<unsigned long> pool{2, 3, 7, 11, 13};
    for (unsigned long ell : {3ul, 5ul}) {
        for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
            std::set<unsigned long> s;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (mask >> i & 1 && pool[i] != ell)
                    s.insert(pool[i]);
            for (auto extra : pool) {
                if (extra == ell || s.count(extra))
                    continue;
                auto t = s;
                t.insert(extra);
                EXPECT_EQ(exact_compare(fontaine_cap(ell, s), fontaine_cap(ell, t)), Ordering::Less);
            }
        }
    }
}

TEST(Odlyzko, DefaultsAndDegreeBounds)
{
    auto table = OdlyzkoTable::defaults();
    auto b6 = odlyzko_max_degree(fontaine_cap(5, {2, 3}), table);
    ASSERT_TRUE(b6.bounded);
    EXPECT_EQ(b6.strict_upper, 2400);
    EXPECT_EQ((b6.strict_upper - 1) / 100, 23);
    auto b10 = odlyzko_max_degree(fontaine_cap(3, {2, 5}), table);
    ASSERT_TRUE(b10.bounded);
    EXPECT_EQ(b10.strict_upper, 280);
    EXPECT_EQ((b10.strict_upper - 1) / 18, 15);
    EXPECT_FALSE(odlyzko_max_degree(RadicalMonomial::of(40), table).bounded);
}

TEST(Odlyzko, ShippedFileMatchesDefaults)
{
    auto t = OdlyzkoTable::load(SEMIAUDIT_DATA_DIR "/odlyzko.txt");
    ASSERT_EQ(t.rows().size(), OdlyzkoTable::defaults().rows().size());
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        EXPECT_EQ(t.rows()[i].degree, OdlyzkoTable::defaults().rows()[i].degree);
        EXPECT_EQ(t.rows()[i].bound, OdlyzkoTable::defaults().rows()[i].bound);
    }
}

TEST(Odlyzko, ParseErrors)
{
    std::istringstream bad("126 20.221\n100 19\n");
    EXPECT_THROW(OdlyzkoTable::parse(bad), std::exception);
    std::istringstream junk("126 x\n");
    EXPECT_THROW(OdlyzkoTable::parse(junk), std::exception);
    std::istringstream ok("# comment\n\n500 26.5  # trailing\n");
    auto t = OdlyzkoTable::defaults().merged(OdlyzkoTable::parse(ok));
    EXPECT_EQ(t.rows().size(), 6u);
    EXPECT_EQ(t.row_at_most(600)->degree, 500);
}

// (a * b^{1/n}) * c^{1/(nm)} = a * (b^m c)^{1/(nm)}
TEST(RootDisc, ComposeAssociative)
{
    std::mt19937 rng(3);
    auto rnd = [&]() {
        RadicalMonomial m;
        for (unsigned long p : {2ul, 3ul, 5ul})
            m *= RadicalMonomial::prime_power(p, make_rat(static_cast<long>(rng() % 9) - 2, 1 + rng() % 6));
        return m;
    };
    for (int it = 0; it < 200; ++it) {
        auto a = rnd(), b = rnd(), c = rnd();
        long n = 1 + rng() % 30, m = 1 + rng() % 30;
        auto left = compose_root_disc(compose_root_disc(a, b, n), c, n * m);
        auto right = compose_root_disc(a, b.pow(m) * c, n * m);
        EXPECT_EQ(left, right);
    }
    EXPECT_THROW(compose_root_disc(RadicalMonomial(), RadicalMonomial(), 0), std::invalid_argument);
}

TEST(RootDisc, TameExponents)
{
    // [L:K] = 6, e = 3 at 2 over 5 base primes of norm 2: 5 * 2 * 2 = 20 = 5*6*(1 - 1/3)
    auto prof = RamificationProfile::tame(100, 6, 2, 3, 1, 5);
    EXPECT_EQ(tame_disc_exponent(prof, 2), 20);
    EXPECT_EQ(prof.disc_exponent(2), 20);
    EXPECT_THROW(RamificationProfile(100, 6, {{2, 4, 1, 1, 3, 1, 1}}), std::invalid_argument);
    EXPECT_THROW(RamificationProfile(100, 5, {{5, 5, 1, 1, 4, 1, 1}}), std::invalid_argument);
    RamificationProfile wild(100, 5, {{5, 5, 1, 1, 8, 1, 1}});
    EXPECT_THROW(tame_disc_exponent(wild, 5), std::invalid_argument);
}

TEST(RootDisc, WildCandidates)
{
    EXPECT_EQ(wild_exponent_candidates(5, 5, {Rat(10), false}), (std::set<long>{8}));
    EXPECT_EQ(wild_exponent_candidates(5, 5, {Rat(12), true}), (std::set<long>{8, 12}));
    EXPECT_EQ(wild_exponent_candidates(3, 3, {Rat(7), false}), (std::set<long>{4, 6}));
    EXPECT_EQ(conductor_from_disc(8, 5), 2);
    EXPECT_THROW(conductor_from_disc(7, 5), std::invalid_argument);
}

TEST(RootDisc, KummerRootDiscriminants)
{
    EXPECT_EQ(kummer_root_disc(3, {2, 5}).str(), "2^(2/3)*3^(7/6)*5^(2/3)");
    EXPECT_EQ(kummer_root_disc(5, {2, 3}).str(), "2^(4/5)*3^(4/5)*5^(23/20)");
}

// the 3^66..3^69 window with every e in {3, 6, 12} refuted
TEST(Window, Order36Case)
{
    auto o12 = groups::order12_check();
    WindowConfig cfg{kummer_root_disc(3, {2, 5}), 18, 12, 3, 3, fontaine_cap(3, {2, 5})};
    GroupObstructions obs{o12.a4_has_normal_index2, o12.a4_has_normal_sylow3, "A4"};
    auto v = disc_window_check(cfg, OdlyzkoTable::defaults(), obs);
    EXPECT_EQ(v.status, Status::Pass) << v.to_json().dump(2);
    EXPECT_EQ(v.quantities["norm_window"]["min_exponent"], 66);
    EXPECT_EQ(v.quantities["norm_window"]["max_exponent"], 69);
    std::set<long> es;
    for (auto& c : v.quantities["cases"]) {
        es.insert(c["e"].get<long>());
        EXPECT_TRUE(c["refuted"].get<bool>());
    }
    EXPECT_EQ(es, (std::set<long>{3, 6, 12}));

    // with a normal Sylow subgroup the e = 12 case survives
    GroupObstructions weak{false, true, "X"};
    EXPECT_EQ(disc_window_check(cfg, OdlyzkoTable::defaults(), weak).status, Status::Fail);
}
