#ifndef SEMIAUDIT_EXACTNUM_RATIONAL_HPP
#define SEMIAUDIT_EXACTNUM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semiaudit {

using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1)
{
    return make_rat(BigInt(num), BigInt(den));
}

// accepts "a", "-a/b"
inline Rat parse_rat(const std::string& s)
{
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: " + s);
    if (r.get_den() == 0)
        throw std::domain_error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline BigInt ipow(const BigInt& b, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat qpow(const Rat& b, long e)
{
    unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r = make_rat(ipow(b.get_num(), a), ipow(b.get_den(), a));
    if (e < 0) {
        if (r == 0)
            throw std::domain_error("negative power of zero");
        r = 1 / r;
    }
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool is_prime(const BigInt& n)
{
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline bool is_prime(std::uint64_t n) { return is_prime(BigInt(static_cast<unsigned long>(n))); }

// trial division; the inputs here are products of a handful of small primes
inline std::vector<std::pair<BigInt, unsigned>> factor_integer(BigInt n)
{
    if (n == 0)
        throw std::domain_error("factor_integer(0)");
    if (n < 0)
        n = -n;
    std::vector<std::pair<BigInt, unsigned>> out;
    for (BigInt p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

// value of v_p(q) for a prime p
inline long valuation(const Rat& q, const BigInt& p)
{
    if (q == 0)
        throw std::domain_error("valuation of zero");
    long v = 0;
    BigInt n = q.get_num(), d = q.get_den();
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

inline std::uint64_t mod_u64(const BigInt& a, std::uint64_t p)
{
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
    return r.get_ui();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    BigInt r;
    BigInt aa(static_cast<unsigned long>(a)), pp(static_cast<unsigned long>(p));
    if (!mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t()))
        throw std::domain_error("not invertible mod p");
    return r.get_ui();
}

// image of a p-integral rational in F_p
inline std::uint64_t rat_mod(const Rat& q, std::uint64_t p)
{
    std::uint64_t d = mod_u64(q.get_den(), p);
    if (d == 0)
        throw std::domain_error("denominator divisible by " + std::to_string(p));
    return mod_u64(q.get_num(), p) * inv_mod(d, p) % p;
}

} // namespace semiaudit

#endif
