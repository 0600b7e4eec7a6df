#include "semiaudit/exactnum/expr.hpp"
#include "semiaudit/exactnum/numfield.hpp"
#include "semiaudit/exactnum/radical.hpp"
#include "semiaudit/exactnum/zfactor.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace semiaudit;

TEST(Rational, ParseAndPow)
{
    EXPECT_EQ(parse_rat("12658/400"), make_rat(6329, 200));
    EXPECT_THROW(parse_rat("31.645"), std::exception);
    EXPECT_EQ(parse_rat("-3/6"), make_rat(-1, 2));
    EXPECT_EQ(qpow(make_rat(2, 3), -2), make_rat(9, 4));
    EXPECT_EQ(valuation(make_rat(50, 27), 5), 2);
    EXPECT_EQ(valuation(make_rat(50, 27), 3), -3);
    EXPECT_EQ(rat_mod(make_rat(1, 2), 5), 3u);
}

TEST(Radical, HeadlineCaps)
{
    auto cap6 = RadicalMonomial::of(5, make_rat(5, 4)) * RadicalMonomial::of(6, make_rat(4, 5));
    EXPECT_EQ(exact_compare(cap6, make_rat(31645, 1000)), Ordering::Less);
    EXPECT_EQ(exact_compare(cap6, make_rat(31349, 1000)), Ordering::Greater);
    EXPECT_EQ(exact_compare(cap6, make_rat(31350, 1000)), Ordering::Less);
    auto cap10 = RadicalMonomial::of(3, make_rat(3, 2)) * RadicalMonomial::of(10, make_rat(2, 3));
    EXPECT_EQ(exact_compare(cap10, make_rat(24258, 1000)), Ordering::Less);
    EXPECT_EQ(exact_compare(cap10, make_rat(24118, 1000)), Ordering::Greater);
    EXPECT_EQ(exact_compare(cap10, make_rat(24119, 1000)), Ordering::Less);
}

TEST(Radical, EqualityIsExact)
{
    auto r = RadicalMonomial::of(8, make_rat(1, 3));
    EXPECT_EQ(exact_compare(r, Rat(2)), Ordering::Equal);
    EXPECT_EQ(RadicalMonomial::of(make_rat(4, 9), make_rat(1, 2)).str(), "2*3^(-1)");
    EXPECT_THROW(RadicalMonomial::prime_power(6, 1), std::invalid_argument);
    EXPECT_THROW(exact_compare(r, Rat(0)), std::domain_error);
}

// exact verdicts agree with 300-bit MPFR wherever the float gap is clear
TEST(Radical, ExactCompareAgreesWithMpfr)
{
    std::mt19937 rng(20240611);
    const unsigned long primes[] = {2, 3, 5, 7, 11};
    int decided = 0;
    for (int it = 0; it < 1000; ++it) {
        RadicalMonomial m;
        Real lg = 0;
        for (auto p : primes) {
            long num = static_cast<long>(rng() % 13) - 4;
            long den = 1 + static_cast<long>(rng() % 12);
            if (rng() % 3 == 0)
                continue;
            Rat e = make_rat(num, den);
            m *= RadicalMonomial::prime_power(p, e);
            lg += to_real(e) * boost::multiprecision::log(Real(p));
        }
        Rat t = make_rat(1 + static_cast<long>(rng() % 100000), 1 + static_cast<long>(rng() % 997));
        Real diff = lg - boost::multiprecision::log(to_real(t));
        Ordering o = exact_compare(m, t);
        if (boost::multiprecision::abs(diff) < Real("1e-80")) {
            EXPECT_EQ(o, Ordering::Equal);
            continue;
        }
        ++decided;
        EXPECT_EQ(o, diff < 0 ? Ordering::Less : Ordering::Greater) << m.str() << " vs " << t.get_str();
    }
    EXPECT_GT(decided, 900);
}

TEST(Radical, MonomialVsMonomial)
{
    auto a = RadicalMonomial::of(2, make_rat(1, 2));
    auto b = RadicalMonomial::of(3, make_rat(1, 3));
    EXPECT_EQ(exact_compare(a, b), Ordering::Less);  // 2^3 < 3^2
    EXPECT_EQ(exact_compare(b, a), Ordering::Greater);
    EXPECT_EQ(exact_compare(a * b, b * a), Ordering::Equal);
}

TEST(Poly, Discriminants)
{
    EXPECT_EQ(poly_discriminant(cyclotomic(5)), Rat(125));
    EXPECT_EQ(poly_discriminant(ZPoly{-1, -1, 1}), Rat(5));
    // x^5 - 2: 5^5 * 2^4
    EXPECT_EQ(poly_discriminant(ZPoly{-2, 0, 0, 0, 0, 1}), Rat(50000));
    EXPECT_EQ(poly_discriminant(ZPoly{-10, 0, 0, 1}), Rat(-2700));
}

TEST(Poly, SturmCounts)
{
    EXPECT_EQ(count_real_roots(to_q(ZPoly{-2, 0, 0, 0, 0, 1})), 1);
    EXPECT_EQ(count_real_roots(to_q(cyclotomic(5))), 0);
    EXPECT_EQ(count_real_roots(to_q(ZPoly{0, -1, 0, 1})), 3);
}

TEST(Poly, ResultantMultiplicative)
{
    ZPoly f{1, 2, 0, 1}, g{-3, 1}, h{2, 0, 1};
    EXPECT_EQ(resultant(f, g * h), resultant(f, g) * resultant(f, h));
}

// brute-force root count mod p against the degree-1 factors of the Berlekamp output
TEST(Fp, FactorizationMatchesRootCount)
{
    std::mt19937 rng(7);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 31u}) {
        for (int it = 0; it < 40; ++it) {
            std::vector<std::uint64_t> c(2 + rng() % 7);
            for (auto& x : c)
                x = rng() % p;
            c.back() = 1;
            FpPoly f(p, c);
            auto fac = factor_mod_p(f);
            FpPoly prod(p, {1});
            std::size_t linear = 0;
            for (auto& [g, m] : fac) {
                for (unsigned i = 0; i < m; ++i)
                    prod = prod * g;
                if (g.degree() == 1)
                    ++linear;
            }
            EXPECT_EQ(prod.c, f.c);
            std::size_t roots = 0;
            for (std::uint64_t x = 0; x < p; ++x)
                roots += f.eval(x) == 0;
            EXPECT_EQ(roots, linear);
        }
    }
}

TEST(Fp, KnownFactorizations)
{
    // x^5 - 2 mod 11: 2 is not a fifth power, so it is irreducible
    auto a = factor_mod_p(ZPoly{-2, 0, 0, 0, 0, 1}, 11);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].first.degree(), 5);
    // Phi_5 splits mod 11
    auto b = factor_mod_p(cyclotomic(5), 11);
    EXPECT_EQ(b.size(), 4u);
    // Phi_5 = (x - 1)^4 mod 5
    auto c = factor_mod_p(cyclotomic(5), 5);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].second, 4u);
}

TEST(ZFactor, ProductsRecombine)
{
    ZPoly f = ZPoly{-2, 0, 1} * ZPoly{-3, 0, 0, 1} * ZPoly{1, 1};
    auto fac = factor_over_q(to_q(f));
    std::multiset<long> degs;
    for (auto& [g, m] : fac)
        degs.insert(g.degree() * m);
    EXPECT_EQ(degs, (std::multiset<long>{1, 2, 3}));
    EXPECT_TRUE(is_irreducible_q(ZPoly{-2, 0, 0, 0, 0, 1}));
    EXPECT_TRUE(is_irreducible_q(cyclotomic(15)));
    EXPECT_FALSE(is_irreducible_q(ZPoly{-4, 0, 0, 0, 1}));
}

TEST(NumberField, GoldenRatio)
{
    auto k = std::make_shared<const NumberField>(ZPoly{-1, -1, 1}, "Q(sqrt5)");
    auto v = AlgebraicNumber::generator(k);
    EXPECT_EQ(v.norm(), Rat(-1));
    EXPECT_EQ(v * (v - AlgebraicNumber::constant(k, 1)), AlgebraicNumber::constant(k, 1));
    // 5 = (2v - 1)^2; the prime above 5 is v = 3 mod 5, i.e. v -> -2
    PrimeIdealRep pi{5, 3, 2, 1};
    EXPECT_EQ(reduce_mod_prime(v, pi), 3u);
}

// reduction at a degree-one prime is a ring homomorphism
TEST(NumberField, ReductionIsHomomorphism)
{
    auto k = std::make_shared<const NumberField>(cyclotomic(5), "Q(zeta5)");
    PrimeIdealRep pi{11, 3, 1, 1};
    std::mt19937 rng(11);
    auto rnd = [&]() {
        std::vector<Rat> c(4);
        for (auto& x : c)
            x = make_rat(static_cast<long>(rng() % 41) - 20, 1 + 2 * static_cast<long>(rng() % 3));
        return AlgebraicNumber(k, c);
    };
    for (int it = 0; it < 200; ++it) {
        auto a = rnd(), b = rnd();
        auto ra = reduce_mod_prime(a, pi), rb = reduce_mod_prime(b, pi);
        EXPECT_EQ(reduce_mod_prime(a * b, pi), ra * rb % 11);
        EXPECT_EQ(reduce_mod_prime(a + b, pi), (ra + rb) % 11);
    }
    EXPECT_THROW(reduce_mod_prime(AlgebraicNumber::generator(k), PrimeIdealRep{11, 2, 1, 1}), std::domain_error);
}

TEST(NumberField, PrimePowerReduction)
{
    // Q(zeta5) at 1 - zeta5: e = 4, v = 1 + pi
    auto k = std::make_shared<const NumberField>(cyclotomic(5), "Q(zeta5)");
    PrimeIdealRep pi{5, 1, 4, 1};
    auto z = AlgebraicNumber::generator(k);
    auto r = reduce_mod_prime_power(z, pi, 2);
    EXPECT_EQ(r, (std::vector<std::uint64_t>{1, 1}));
    EXPECT_THROW(reduce_mod_prime_power(z, pi, 5), std::invalid_argument);
}

TEST(NumberField, KummerClasses)
{
    // 18 = 2 * 3^2 and 12 = 2^2 * 3: 18^2 = 2^2 3^4 ~ 12^? over 5th powers
    EXPECT_EQ(kummer_class_equiv(18, 18, 5), std::optional<unsigned>(1));
    EXPECT_EQ(kummer_class_equiv(make_rat(18 * 18, 1), 18, 5), std::optional<unsigned>(2));
    EXPECT_FALSE(kummer_class_equiv(2, 3, 5).has_value());
    EXPECT_EQ(kummer_class_equiv(576, 18, 5), std::optional<unsigned>(1));  // 2^6 3^2
    EXPECT_THROW(kummer_class_equiv(32, 2, 5), std::domain_error);
}

TEST(Expr, MinimalPolynomials)
{
    auto phi = (Expr::rational(1) + Expr::root(5, 2)) / Expr::rational(2);
    EXPECT_EQ(minimal_polynomial(phi), (ZPoly{-1, -1, 1}));
    auto z = Expr::zeta(5);
    EXPECT_EQ(minimal_polynomial(z), cyclotomic(5));
    // zeta5 + zeta5^-1 = (sqrt5 - 1)/2
    EXPECT_EQ(minimal_polynomial(z + z * z * z * z), (ZPoly{-1, 1, 1}));
    auto c = Expr::root(2, 3) * Expr::root(5, 3);
    EXPECT_EQ(minimal_polynomial(c), (ZPoly{-10, 0, 0, 1}));
}
