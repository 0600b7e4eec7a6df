#ifndef SEMIAUDIT_EXACTNUM_ZFACTOR_HPP
#define SEMIAUDIT_EXACTNUM_ZFACTOR_HPP

#include "semiaudit/exactnum/fp.hpp"

#include <map>
#include <set>
#include <vector>

namespace semiaudit {

namespace detail {

inline BigInt smod(const BigInt& a, const BigInt& m)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m)
        r -= m;
    return r;
}

inline ZPoly reduce_sym(const ZPoly& f, const BigInt& m)
{
    std::vector<BigInt> v;
    for (auto& a : f.c)
        v.push_back(smod(a, m));
    return ZPoly(std::move(v));
}

// exact division of integer polynomials; false if the remainder is non-zero
inline bool zdivides(const ZPoly& g, const ZPoly& f, ZPoly* quot = nullptr)
{
    QPoly q, r;
    divmod(to_q(f), to_q(g), q, r);
    if (!r.is_zero())
        return false;
    for (auto& a : q.c)
        if (a.get_den() != 1)
            return false;
    if (quot) {
        std::vector<BigInt> v;
        for (auto& a : q.c)
            v.push_back(a.get_num());
        *quot = ZPoly(std::move(v));
    }
    return true;
}

// monic division of g by monic h modulo m
inline ZPoly divmod_monic(const ZPoly& a, const ZPoly& h, const BigInt& m, ZPoly& rem)
{
    std::vector<BigInt> r = a.c;
    long dh = h.degree();
    std::vector<BigInt> q(std::max<long>(a.degree() - dh + 1, 0), BigInt(0));
    for (long k = static_cast<long>(r.size()) - 1 - dh; k >= 0; --k) {
        BigInt t = smod(r[k + dh], m);
        q[k] = t;
        for (long i = 0; i <= dh; ++i)
            r[k + i] = smod(r[k + i] - t * h.c[i], m);
    }
    rem = reduce_sym(ZPoly(std::move(r)), m);
    return reduce_sym(ZPoly(std::move(q)), m);
}

// lifts f = g*h mod p (g, h monic, f monic mod p^a) to mod p^a
inline void hensel_pair(const ZPoly& f, FpPoly g0, FpPoly h0, std::uint64_t p, unsigned a, ZPoly& g, ZPoly& h)
{
    FpPoly s, t;
    fp_xgcd(g0, h0, s, t);
    BigInt P(static_cast<unsigned long>(p));
    BigInt pk = P;
    g = g0.lift();
    h = h0.lift();
    for (unsigned k = 1; k < a; ++k) {
        BigInt next = pk * P;
        ZPoly e = reduce_sym(f - g * h, next);
        std::vector<BigInt> ev;
        for (auto& x : e.c) {
            BigInt qd;
            mpz_divexact(qd.get_mpz_t(), x.get_mpz_t(), pk.get_mpz_t());
            ev.push_back(qd);
        }
        FpPoly ebar = FpPoly::from_z(ZPoly(std::move(ev)), p);
        // dg = e t mod g, dh = (e - h dg)/g, so that g dh + h dg = e mod p
        FpPoly dg = ebar * t % g0;
        FpPoly dh = (ebar - h0 * dg) / g0;
        g = reduce_sym(g + pk * dg.lift(), next);
        h = reduce_sym(h + pk * dh.lift(), next);
        pk = next;
    }
}

inline void hensel_multi(const ZPoly& f, const std::vector<FpPoly>& fac, std::uint64_t p, unsigned a,
                         std::vector<ZPoly>& out)
{
    if (fac.size() == 1) {
        out.push_back(f);
        return;
    }
    std::size_t half = fac.size() / 2;
    FpPoly g0(p, {1}), h0(p, {1});
    for (std::size_t i = 0; i < fac.size(); ++i)
        (i < half ? g0 : h0) = (i < half ? g0 : h0) * fac[i];
    ZPoly g, h;
    hensel_pair(f, g0, h0, p, a, g, h);
    hensel_multi(g, std::vector<FpPoly>(fac.begin(), fac.begin() + half), p, a, out);
    hensel_multi(h, std::vector<FpPoly>(fac.begin() + half, fac.end()), p, a, out);
}

inline BigInt coefficient_bound(const ZPoly& f)
{
    // 2^n * sqrt(n+1) * max|c| * |lc| bounds every coefficient of lc * (a factor)
    BigInt mx = 0;
    for (auto& a : f.c)
        mx = std::max<BigInt>(mx, abs(a));
    BigInt r = mx * abs(f.lead()) * ipow(2, f.degree());
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), BigInt(f.degree() + 1).get_mpz_t());
    return r * (s + 1);
}

inline bool good_prime(const ZPoly& f, std::uint64_t p)
{
    if (mod_u64(f.lead(), p) == 0)
        return false;
    FpPoly fp = FpPoly::from_z(f, p);
    return fp_gcd(fp, fp.derivative()).degree() == 0;
}

} // namespace detail

// factors a squarefree primitive integer polynomial of degree >= 1 (Zassenhaus)
inline std::vector<ZPoly> factor_squarefree_z(ZPoly f)
{
    if (f.degree() <= 1)
        return {f};
    std::uint64_t best_p = 0;
    std::vector<FpPoly> best;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 8; p += 2) {
        if (!is_prime(p) || !detail::good_prime(f, p))
            continue;
        ++tried;
        std::vector<FpPoly> fs;
        for (auto& [g, m] : factor_mod_p(FpPoly::from_z(f, p)))
            fs.push_back(g);
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best = fs;
        }
        if (best.size() == 1)
            return {f};
    }
    std::uint64_t p = best_p;
    BigInt B = 2 * detail::coefficient_bound(f) + 1;
    unsigned a = 1;
    BigInt pa(static_cast<unsigned long>(p));
    while (pa <= B) {
        pa *= static_cast<unsigned long>(p);
        ++a;
    }
    // monic version of f modulo p^a
    BigInt lc = f.lead(), lcinv;
    mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), pa.get_mpz_t());
    ZPoly fm = detail::reduce_sym(lcinv * f, pa);
    std::vector<ZPoly> lifted;
    detail::hensel_multi(fm, best, p, a, lifted);

    std::vector<ZPoly> result;
    std::vector<bool> used(lifted.size(), false);
    std::size_t remaining = lifted.size();
    for (std::size_t size = 1; 2 * size <= remaining; ++size) {
        bool found = true;
        while (found && 2 * size <= remaining) {
            found = false;
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < lifted.size(); ++i)
                if (!used[i])
                    idx.push_back(i);
            std::vector<std::size_t> sel(size);
            for (std::size_t i = 0; i < size; ++i)
                sel[i] = i;
            while (true) {
                ZPoly g = ZPoly::constant(f.lead());
                for (auto s : sel)
                    g = detail::reduce_sym(g * lifted[idx[s]], pa);
                g = primitive_part(g);
                ZPoly q;
                if (detail::zdivides(g, f, &q)) {
                    result.push_back(g);
                    f = q;
                    for (auto s : sel)
                        used[idx[s]] = true;
                    remaining -= size;
                    found = true;
                    break;
                }
                // next combination
                long k = static_cast<long>(size) - 1;
                while (k >= 0 && sel[k] == idx.size() - size + k)
                    --k;
                if (k < 0)
                    break;
                ++sel[k];
                for (std::size_t j = k + 1; j < size; ++j)
                    sel[j] = sel[j - 1] + 1;
            }
        }
    }
    if (f.degree() > 0)
        result.push_back(primitive_part(f));
    return result;
}

// factorization over Q: primitive irreducible integer factors with multiplicities
inline std::vector<std::pair<ZPoly, unsigned>> factor_over_q(const QPoly& f0)
{
    if (f0.degree() < 1)
        throw std::domain_error("factor_over_q needs degree >= 1");
    std::vector<std::pair<ZPoly, unsigned>> out;
    // Yun squarefree decomposition over Q
    QPoly f = monic(f0);
    QPoly a = poly_gcd(f, f.derivative());
    QPoly b = f / a;
    QPoly c = f.derivative() / a;
    QPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        QPoly g = poly_gcd(b, d);
        if (g.degree() > 0)
            for (auto& h : factor_squarefree_z(primitive_part(g)))
                out.emplace_back(h, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
        if (x.first.degree() != y.first.degree())
            return x.first.degree() < y.first.degree();
        return x.first.c < y.first.c;
    });
    return out;
}

// degree sets realizable by factors mod p; intersection over primes leaves {0, n} iff proven irreducible
inline std::set<long> factor_degree_sums(const FpFactorization& fac)
{
    std::set<long> sums{0};
    for (auto& [g, m] : fac)
        for (unsigned k = 0; k < m; ++k) {
            std::set<long> next = sums;
            for (long s : sums)
                next.insert(s + g.degree());
            sums = std::move(next);
        }
    return sums;
}

inline bool is_irreducible_q(const ZPoly& f)
{
    long n = f.degree();
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    ZPoly pf = primitive_part(f);
    if (poly_gcd(to_q(pf), to_q(pf).derivative()).degree() > 0)
        return false;
    std::set<long> possible;
    for (long k = 0; k <= n; ++k)
        possible.insert(k);
    int used = 0;
    for (std::uint64_t p = 2; used < 30 && p < 2000; ++p) {
        if (!is_prime(p) || !detail::good_prime(pf, p))
            continue;
        ++used;
        std::set<long> s = factor_degree_sums(factor_mod_p(pf, p)), keep;
        for (long k : possible)
            if (s.count(k))
                keep.insert(k);
        possible = std::move(keep);
        if (possible.size() == 2)
            return true;
    }
    return factor_squarefree_z(pf).size() == 1;
}

} // namespace semiaudit

#endif
