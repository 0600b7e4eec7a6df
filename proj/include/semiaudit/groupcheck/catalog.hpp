#ifndef SEMIAUDIT_GROUPCHECK_CATALOG_HPP
#define SEMIAUDIT_GROUPCHECK_CATALOG_HPP

#include "semiaudit/groupcheck/group.hpp"

#include <array>
#include <mutex>
#include <tuple>

namespace semiaudit::groups {

inline FiniteGroup dihedral(int m)
{
    // symmetries of an m-gon, order 2m
    Perm r(m), s(m);
    for (int i = 0; i < m; ++i) {
        r[i] = (i + 1) % m;
        s[i] = (m - i) % m;
    }
    if (m == 1)
        return cyclic(2);
    return permutation_group({r, s}, "D" + std::to_string(m));
}

inline Map power_map(const FiniteGroup& c, int k)
{
    Map m(c.order());
    for (int x = 0; x < c.order(); ++x)
        m[x] = c.pow(x, k);
    return m;
}

// <a, x | a^{2m}, x^2 = a^m, x a x^-1 = a^-1>, order 4m
inline FiniteGroup dicyclic(int m)
{
    FiniteGroup c = cyclic(2 * m);
    return cyclic_extension(c, power_map(c, -1), m, 2, m == 2 ? "Q8" : "Dic" + std::to_string(m));
}

inline FiniteGroup alternating4()
{
    return permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
}

inline FiniteGroup symmetric(int k)
{
    Perm t(k), c(k);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < k; ++i)
        c[i] = (i + 1) % k;
    return permutation_group({t, c}, "S" + std::to_string(k));
}

// x -> a x + b over F_p with a in the subgroup of order k
inline FiniteGroup affine(int p, int k, std::string label)
{
    int g = 1;
    for (int cand = 2; cand < p; ++cand) {
        int o = 1, x = cand;
        while (x != 1) {
            x = x * cand % p;
            ++o;
        }
        if (o == k) {
            g = cand;
            break;
        }
    }
    using A = std::pair<int, int>;
    auto mul = [p](const A& u, const A& v) { return A{u.first * v.first % p, (u.first * v.second + u.second) % p}; };
    return group_from_generators<A>({{1, 1}, {g, 0}}, {1, 0}, mul, std::move(label));
}

// upper unitriangular 3x3 matrices over F_p
inline FiniteGroup heisenberg(int p)
{
    using H = std::array<int, 3>;
    auto mul = [p](const H& u, const H& v) {
        return H{(u[0] + v[0]) % p, (u[1] + v[1]) % p, (u[2] + v[2] + u[0] * v[1]) % p};
    };
    return group_from_generators<H>({{1, 0, 0}, {0, 1, 0}}, {0, 0, 0}, mul, "He" + std::to_string(p));
}

// C_{p^2} x| C_p with generator acting by x -> (1+p) x
inline FiniteGroup modular_pgroup(int p)
{
    FiniteGroup c = cyclic(p * p);
    return cyclic_extension(c, power_map(c, 1 + p), 0, p,
                            "C" + std::to_string(p * p) + ":C" + std::to_string(p));
}

inline std::vector<FiniteGroup> named_groups()
{
    std::vector<FiniteGroup> v;
    for (int m = 3; m <= 13; ++m)
        v.push_back(dihedral(m));
    v.push_back(dihedral(25));
    for (int m = 2; m <= 6; ++m)
        v.push_back(dicyclic(m));
    v.push_back(alternating4());
    v.push_back(symmetric(4));
    v.push_back(affine(5, 4, "F20"));
    v.push_back(affine(7, 3, "F21"));
    v.push_back(affine(13, 3, "C13:C3"));
    v.push_back(heisenberg(3));
    v.push_back(heisenberg(5));
    v.push_back(modular_pgroup(3));
    v.push_back(modular_pgroup(5));
    v.push_back(direct_product(cyclic(5), dihedral(5), "C5xD5"));
    v.push_back(direct_product(cyclic(2), alternating4(), "C2xA4"));
    v.push_back(direct_product(cyclic(2), dihedral(4), "C2xD4"));
    v.push_back(direct_product(cyclic(2), dicyclic(2), "C2xQ8"));
    v.push_back(direct_product(cyclic(3), dihedral(3), "C3xS3"));
    v.push_back(direct_product(cyclic(2), dihedral(6), "C2xD6"));
    v.push_back(direct_product(cyclic(3), dihedral(4), "C3xD4"));
    v.push_back(direct_product(cyclic(3), dicyclic(2), "C3xQ8"));
    v.push_back(direct_product(cyclic(4), dihedral(3), "C4xS3"));
    v.push_back(direct_product(cyclic(2), dicyclic(3), "C2xDic3"));
    v.push_back(direct_product(cyclic(2), dihedral(5), "C2xD5"));
    v.push_back(direct_product(cyclic(3), dihedral(3), "C3xS3"));
    return v;
}

inline bool supported_order(int n) { return (n >= 1 && n <= 27) || n == 50 || n == 125; }

namespace detail {

// enumerates N.C_p for every normal subgroup order n/p and removes isomorphic duplicates
inline std::vector<FiniteGroup> enumerate_order(int n, const std::function<const std::vector<FiniteGroup>&(int)>& sub)
{
    if (n == 1)
        return {cyclic(1)};
    std::vector<FiniteGroup> reps;
    std::map<std::vector<int>, std::vector<std::size_t>> by_sig;
    auto consider = [&](FiniteGroup g) {
        auto sig = signature(g);
        auto& bucket = by_sig[sig];
        for (auto i : bucket)
            if (isomorphic(g, reps[i]))
                return;
        bucket.push_back(reps.size());
        reps.push_back(std::move(g));
    };
    for (auto [p, e] : small_factor(n)) {
        for (auto& nrm : sub(n / p)) {
            auto auts = automorphisms(nrm);
            int m = nrm.order();
            // conjugacy classes of Aut(N); conjugate choices give isomorphic extensions
            std::set<Map> seen;
            std::vector<Map> inner;
            for (int z = 0; z < m; ++z) {
                Map c(m);
                for (int x = 0; x < m; ++x)
                    c[x] = nrm.conj(z, x);
                inner.push_back(c);
            }
            for (auto& a : auts) {
                if (seen.count(a))
                    continue;
                for (auto& b : auts) {
                    Map binv(m);
                    for (int x = 0; x < m; ++x)
                        binv[b[x]] = x;
                    seen.insert(compose(b, compose(a, binv)));
                }
                Map ap = identity_map(m);
                for (int i = 0; i < p; ++i)
                    ap = compose(a, ap);
                for (int z = 0; z < m; ++z)
                    if (a[z] == z && ap == inner[z])
                        consider(cyclic_extension(nrm, a, z, p));
            }
        }
    }
    std::stable_sort(reps.begin(), reps.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
        bool aa = a.is_abelian(), ba = b.is_abelian();
        if (aa != ba)
            return aa;
        return signature(a) < signature(b);
    });
    // labels: invariant factors for abelian groups, known names otherwise
    static const std::vector<FiniteGroup> names = named_groups();
    int anon = 0;
    for (auto& g : reps) {
        if (g.is_abelian()) {
            g.set_label(invariants_label(abelian_invariants(g)));
            continue;
        }
        std::string label;
        for (auto& h : names)
            if (h.order() == n && isomorphic(g, h)) {
                label = h.label();
                break;
            }
        g.set_label(label.empty() ? "G" + std::to_string(n) + "#" + std::to_string(++anon) : label);
    }
    return reps;
}

} // namespace detail

// one representative per isomorphism class, generated as cyclic extensions of smaller catalog groups
inline const std::vector<FiniteGroup>& catalog(int n)
{
    if (!supported_order(n))
        throw std::invalid_argument("catalog: unsupported order " + std::to_string(n));
    static std::recursive_mutex mu;
    static std::map<int, std::vector<FiniteGroup>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::function<const std::vector<FiniteGroup>&(int)> sub = [](int m) -> const std::vector<FiniteGroup>& {
        return catalog(m);
    };
    auto groups = detail::enumerate_order(n, sub);
    return cache.emplace(n, std::move(groups)).first->second;
}

inline const FiniteGroup& catalog_group(int n, const std::string& label)
{
    for (auto& g : catalog(n))
        if (g.label() == label)
            return g;
    throw std::out_of_range("no group " + label + " of order " + std::to_string(n));
}

// sizes of the isomorphism classes by the standard classification
inline int standard_group_count(int n)
{
    static const std::map<int, int> counts{
        {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},  {9, 2},   {10, 2},
        {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14}, {17, 1}, {18, 5}, {19, 1}, {20, 5},
        {21, 2}, {22, 2}, {23, 1}, {24, 15}, {25, 2}, {26, 2}, {27, 5}, {50, 5}, {125, 5}};
    return counts.at(n);
}

} // namespace semiaudit::groups

#endif
