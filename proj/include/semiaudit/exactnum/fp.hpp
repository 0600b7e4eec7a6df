#ifndef SEMIAUDIT_EXACTNUM_FP_HPP
#define SEMIAUDIT_EXACTNUM_FP_HPP

#include "semiaudit/exactnum/poly.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace semiaudit {

// polynomial over F_p, p < 2^31, coefficients low degree first
struct FpPoly {
    std::uint64_t p = 2;
    std::vector<std::uint64_t> c;

    FpPoly() = default;
    FpPoly(std::uint64_t pp, std::vector<std::uint64_t> v) : p(pp), c(std::move(v))
    {
        for (auto& a : c)
            a %= p;
        trim();
    }

    static FpPoly from_z(const ZPoly& f, std::uint64_t p)
    {
        std::vector<std::uint64_t> v;
        for (auto& a : f.c)
            v.push_back(mod_u64(a, p));
        return FpPoly(p, std::move(v));
    }
    static FpPoly from_q(const QPoly& f, std::uint64_t p)
    {
        std::vector<std::uint64_t> v;
        for (auto& a : f.c)
            v.push_back(rat_mod(a, p));
        return FpPoly(p, std::move(v));
    }
    static FpPoly monomial(std::uint64_t p, std::size_t k, std::uint64_t a = 1)
    {
        std::vector<std::uint64_t> v(k + 1, 0);
        v[k] = a;
        return FpPoly(p, std::move(v));
    }

    void trim()
    {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    std::uint64_t lead() const { return c.back(); }
    std::uint64_t eval(std::uint64_t x) const
    {
        std::uint64_t r = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            r = (r * x + c[i]) % p;
        return r;
    }

    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p == b.p && a.c == b.c; }
    friend bool operator<(const FpPoly& a, const FpPoly& b)
    {
        if (a.c.size() != b.c.size())
            return a.c.size() < b.c.size();
        for (std::size_t i = a.c.size(); i-- > 0;)
            if (a.c[i] != b.c[i])
                return a.c[i] < b.c[i];
        return false;
    }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b)
    {
        std::vector<std::uint64_t> v(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = ((i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0)) % a.p;
        return FpPoly(a.p, std::move(v));
    }
    FpPoly neg() const
    {
        FpPoly r = *this;
        for (auto& x : r.c)
            x = x ? p - x : 0;
        return r;
    }
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + b.neg(); }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return FpPoly(a.p, {});
        std::vector<std::uint64_t> v(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                v[i + j] = (v[i + j] + a.c[i] * b.c[j]) % a.p;
        return FpPoly(a.p, std::move(v));
    }
    FpPoly scaled(std::uint64_t s) const
    {
        FpPoly r = *this;
        for (auto& x : r.c)
            x = x * (s % p) % p;
        r.trim();
        return r;
    }
    FpPoly monic() const { return is_zero() ? *this : scaled(inv_mod(lead(), p)); }
    FpPoly derivative() const
    {
        std::vector<std::uint64_t> v;
        for (std::size_t i = 1; i < c.size(); ++i)
            v.push_back(c[i] * (i % p) % p);
        return FpPoly(p, std::move(v));
    }
    ZPoly lift() const
    {
        std::vector<BigInt> v;
        for (auto a : c)
            v.emplace_back(static_cast<unsigned long>(a));
        return ZPoly(std::move(v));
    }
};

inline void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r)
{
    if (b.is_zero())
        throw std::domain_error("FpPoly division by zero");
    std::uint64_t p = a.p;
    r = a;
    long db = b.degree();
    std::vector<std::uint64_t> qv(std::max<long>(a.degree() - db + 1, 0), 0);
    std::uint64_t inv = inv_mod(b.lead(), p);
    while (!r.is_zero() && r.degree() >= db) {
        long k = r.degree() - db;
        std::uint64_t t = r.lead() * inv % p;
        qv[k] = t;
        for (long i = 0; i <= db; ++i)
            r.c[i + k] = (r.c[i + k] + (p - t) * b.c[i]) % p;
        r.trim();
    }
    q = FpPoly(p, std::move(qv));
}

inline FpPoly operator%(const FpPoly& a, const FpPoly& b)
{
    FpPoly q, r;
    divmod(a, b, q, r);
    return r;
}
inline FpPoly operator/(const FpPoly& a, const FpPoly& b)
{
    FpPoly q, r;
    divmod(a, b, q, r);
    return q;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b)
{
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// s*a + t*b = gcd (monic)
inline FpPoly fp_xgcd(FpPoly a, FpPoly b, FpPoly& s, FpPoly& t)
{
    std::uint64_t p = a.p;
    FpPoly s0(p, {1}), s1(p, {}), t0(p, {}), t1(p, {1});
    while (!b.is_zero()) {
        FpPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        FpPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::uint64_t inv = inv_mod(a.lead(), p);
    s = s0.scaled(inv);
    t = t0.scaled(inv);
    return a.scaled(inv);
}

inline FpPoly fp_powmod(FpPoly b, BigInt e, const FpPoly& m)
{
    FpPoly r(m.p, {1});
    b = b % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// squarefree factorization: pairs (squarefree monic, multiplicity)
inline std::vector<std::pair<FpPoly, unsigned>> fp_squarefree(const FpPoly& f0)
{
    std::uint64_t p = f0.p;
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly f = f0.monic();
    if (f.degree() < 1)
        return out;
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p) = g^(1/p)(x)^p since a^p = a in F_p
        std::vector<std::uint64_t> v;
        for (std::size_t i = 0; i < f.c.size(); i += p)
            v.push_back(f.c[i]);
        for (auto& [g, m] : fp_squarefree(FpPoly(p, std::move(v))))
            out.emplace_back(g, m * static_cast<unsigned>(p));
        return out;
    }
    FpPoly c = fp_gcd(f, d);
    FpPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = fp_gcd(w, c);
        FpPoly z = w / y;
        if (z.degree() > 0)
            out.emplace_back(z.monic(), i);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        // remaining part is a p-th power
        std::vector<std::uint64_t> v;
        for (std::size_t k = 0; k < c.c.size(); k += p)
            v.push_back(c.c[k]);
        for (auto& [g, m] : fp_squarefree(FpPoly(p, std::move(v))))
            out.emplace_back(g, m * static_cast<unsigned>(p));
    }
    return out;
}

// nullspace of a square matrix over F_p, rows are vectors
inline std::vector<std::vector<std::uint64_t>> fp_nullspace(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p)
{
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<long> pivcol;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = inv_mod(m[r][col], p);
        for (auto& x : m[r])
            x = x * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0)
                continue;
            std::uint64_t f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        pivcol.push_back(static_cast<long>(col));
        ++r;
    }
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<bool> is_piv(cols, false);
    for (auto c : pivcol)
        is_piv[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_piv[free])
            continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivcol.size(); ++i)
            v[pivcol[i]] = (p - m[i][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Berlekamp splitting of a squarefree monic polynomial into monic irreducibles
inline std::vector<FpPoly> fp_berlekamp(const FpPoly& f)
{
    std::uint64_t p = f.p;
    long n = f.degree();
    if (n <= 1)
        return {f};
    // columns of Q - I: x^{p i} mod f; kernel of (Q - I)^T acting on coefficient rows
    std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
    FpPoly xp = fp_powmod(FpPoly::monomial(p, 1), BigInt(static_cast<unsigned long>(p)), f);
    FpPoly cur(p, {1});
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j)
            q[j][i] = j <= cur.degree() ? cur.c[j] : 0;
        q[i][i] = (q[i][i] + p - 1) % p;
        cur = cur * xp % f;
    }
    auto kernel = fp_nullspace(q, p);
    std::size_t r = kernel.size();
    if (r == 1)
        return {f};
    std::vector<FpPoly> factors{f};
    for (auto& vec : kernel) {
        FpPoly v(p, vec);
        if (v.degree() < 1)
            continue;
        std::vector<FpPoly> next;
        for (auto& g : factors) {
            if (g.degree() <= 1) {
                next.push_back(g);
                continue;
            }
            FpPoly rest = g;
            for (std::uint64_t s = 0; s < p && rest.degree() > 0; ++s) {
                FpPoly h = fp_gcd(rest, v - FpPoly(p, {s}));
                if (h.degree() > 0 && h.degree() < rest.degree()) {
                    next.push_back(h);
                    rest = (rest / h).monic();
                }
            }
            if (rest.degree() > 0)
                next.push_back(rest);
        }
        factors = std::move(next);
        if (factors.size() == r)
            break;
    }
    return factors;
}

using FpFactorization = std::vector<std::pair<FpPoly, unsigned>>;

// complete factorization over F_p into monic irreducibles with multiplicities, sorted
inline FpFactorization factor_mod_p(const FpPoly& f)
{
    if (f.is_zero())
        throw std::domain_error("factor_mod_p: polynomial vanishes mod p");
    std::map<FpPoly, unsigned> acc;
    for (auto& [g, m] : fp_squarefree(f))
        for (auto& h : fp_berlekamp(g))
            acc[h] += m;
    return FpFactorization(acc.begin(), acc.end());
}

inline FpFactorization factor_mod_p(const ZPoly& f, std::uint64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("factor_mod_p: modulus is not prime");
    return factor_mod_p(FpPoly::from_z(f, p));
}

inline std::string to_string(const FpPoly& f, const std::string& var = "x")
{
    std::vector<BigInt> v;
    for (auto a : f.c) {
        long s = static_cast<long>(a);
        if (2 * a > f.p)
            s -= static_cast<long>(f.p);
        v.emplace_back(s);
    }
    return ZPoly(std::move(v)).str(var);
}

} // namespace semiaudit

#endif
