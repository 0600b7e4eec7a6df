#ifndef SEMIAUDIT_CFT_KUMMER_HPP
#define SEMIAUDIT_CFT_KUMMER_HPP

#include "semiaudit/exactnum/rational.hpp"

#include <stdexcept>
#include <vector>

namespace semiaudit {

// Q(zeta_ell, m^{1/ell}) / Q(zeta_ell) is unramified above ell iff m^{ell-1} = 1 mod ell^2
inline bool unramified_criterion(const BigInt& m, unsigned long ell)
{
    if (m == 0 || BigInt(m % ell) == 0)
        throw std::domain_error("unramified_criterion: ell divides m");
    BigInt mod = BigInt(ell) * ell;
    BigInt r;
    mpz_powm_ui(r.get_mpz_t(), m.get_mpz_t(), ell - 1, mod.get_mpz_t());
    return r == 1;
}

// one exponent vector per line of (Z/ell)^r, normalized so the first non-zero entry is 1
struct KummerLine {
    std::vector<unsigned long> exps;
    BigInt value;  // prod p_i^{e_i} with 0 <= e_i < ell
};

inline std::vector<KummerLine> kummer_lines(const std::vector<unsigned long>& primes, unsigned long ell)
{
    std::vector<KummerLine> out;
    std::size_t r = primes.size();
    std::vector<unsigned long> e(r, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < r && ++e[i] == ell)
            e[i++] = 0;
        if (i == r)
            break;
        std::size_t first = 0;
        while (first < r && e[first] == 0)
            ++first;
        if (e[first] != 1)
            continue;
        BigInt v = 1;
        for (std::size_t k = 0; k < r; ++k)
            v *= ipow(BigInt(primes[k]), e[k]);
        out.push_back({e, v});
    }
    return out;
}

} // namespace semiaudit

#endif
