#ifndef SEMIAUDIT_GROUPCHECK_TRUNCATED_HPP
#define SEMIAUDIT_GROUPCHECK_TRUNCATED_HPP

#include "semiaudit/verdict.hpp"

#include <array>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiaudit::groups {

// F_3[a]/(a^k), k <= 4, coefficients low to high
struct Trunc {
    static constexpr int kMax = 4;
    int k = 3;
    std::array<int, kMax> c{};

    static Trunc constant(int k, int v)
    {
        Trunc t;
        t.k = k;
        t.c[0] = ((v % 3) + 3) % 3;
        return t;
    }
    static Trunc from_index(int k, int idx)
    {
        Trunc t;
        t.k = k;
        for (int i = 0; i < k; ++i, idx /= 3)
            t.c[i] = idx % 3;
        return t;
    }
    int index() const
    {
        int idx = 0;
        for (int i = k - 1; i >= 0; --i)
            idx = idx * 3 + c[i];
        return idx;
    }
    bool is_zero() const
    {
        for (int i = 0; i < k; ++i)
            if (c[i])
                return false;
        return true;
    }
    Trunc truncated(int k2) const
    {
        Trunc t;
        t.k = k2;
        for (int i = 0; i < k2; ++i)
            t.c[i] = c[i];
        return t;
    }
    friend Trunc operator+(const Trunc& a, const Trunc& b)
    {
        Trunc t;
        t.k = a.k;
        for (int i = 0; i < a.k; ++i)
            t.c[i] = (a.c[i] + b.c[i]) % 3;
        return t;
    }
    friend Trunc operator-(const Trunc& a, const Trunc& b)
    {
        Trunc t;
        t.k = a.k;
        for (int i = 0; i < a.k; ++i)
            t.c[i] = (a.c[i] - b.c[i] + 3) % 3;
        return t;
    }
    friend Trunc operator*(const Trunc& a, const Trunc& b)
    {
        Trunc t;
        t.k = a.k;
        for (int i = 0; i < a.k; ++i)
            for (int j = 0; i + j < a.k; ++j)
                t.c[i + j] = (t.c[i + j] + a.c[i] * b.c[j]) % 3;
        return t;
    }
    friend bool operator==(const Trunc& a, const Trunc& b) { return a.k == b.k && a.c == b.c; }
    friend bool operator<(const Trunc& a, const Trunc& b) { return a.c < b.c; }

    std::string str() const
    {
        std::string s;
        for (int i = 0; i < k; ++i) {
            if (!c[i])
                continue;
            if (!s.empty())
                s += " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
            s += (c[i] == 1 && i ? "" : std::to_string(c[i])) + mono;
        }
        return s.empty() ? "0" : s;
    }
};

// 2x2 matrix over F_3[a]/(a^k): entries (m00 m01; m10 m11)
struct TruncatedPolyMatrix {
    std::array<Trunc, 4> m;

    static TruncatedPolyMatrix identity(int k)
    {
        return {{Trunc::constant(k, 1), Trunc::constant(k, 0), Trunc::constant(k, 0), Trunc::constant(k, 1)}};
    }
    friend TruncatedPolyMatrix operator*(const TruncatedPolyMatrix& x, const TruncatedPolyMatrix& y)
    {
        return {{x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
                 x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
    }
    friend TruncatedPolyMatrix operator-(const TruncatedPolyMatrix& x, const TruncatedPolyMatrix& y)
    {
        return {{x.m[0] - y.m[0], x.m[1] - y.m[1], x.m[2] - y.m[2], x.m[3] - y.m[3]}};
    }
    friend bool operator==(const TruncatedPolyMatrix& x, const TruncatedPolyMatrix& y) { return x.m == y.m; }
    friend bool operator<(const TruncatedPolyMatrix& x, const TruncatedPolyMatrix& y) { return x.m < y.m; }

    Trunc det() const { return m[0] * m[3] - m[1] * m[2]; }
    bool is_zero() const { return m[0].is_zero() && m[1].is_zero() && m[2].is_zero() && m[3].is_zero(); }

    // inverse of a matrix with unit determinant; units of F_3[a]/(a^k) invert by the geometric series
    TruncatedPolyMatrix inverse() const
    {
        Trunc d = det();
        if (d.c[0] == 0)
            throw std::domain_error("TruncatedPolyMatrix: singular");
        int k = d.k;
        Trunc u = Trunc::constant(k, d.c[0]);  // d0^{-1} = d0 in F_3
        Trunc n = Trunc::constant(k, 0) - (d * u - Trunc::constant(k, 1));  // 1 - d/d0
        Trunc inv = Trunc::constant(k, 1), p = Trunc::constant(k, 1);
        for (int i = 1; i < k; ++i) {
            p = p * n;
            inv = inv + p;
        }
        inv = inv * u;
        Trunc z = Trunc::constant(k, 0);
        return {{m[3] * inv, (z - m[1]) * inv, (z - m[2]) * inv, m[0] * inv}};
    }
};

inline TruncatedPolyMatrix sigma_matrix(const Trunc& a)
{
    int k = a.k;
    return {{Trunc::constant(k, 1), a, Trunc::constant(k, 0), Trunc::constant(k, 1)}};
}

inline TruncatedPolyMatrix tau_matrix(int k)
{
    return {{Trunc::constant(k, 1), Trunc::constant(k, 0), Trunc::constant(k, 1), Trunc::constant(k, 1)}};
}

inline TruncatedPolyMatrix group_commutator(const TruncatedPolyMatrix& x, const TruncatedPolyMatrix& y)
{
    return x.inverse() * y.inverse() * x * y;
}

// size of <gens>, or cap+1 once the closure exceeds cap
inline std::size_t closure_size(const std::vector<TruncatedPolyMatrix>& gens, std::size_t cap)
{
    int k = gens.front().m[0].k;
    std::set<TruncatedPolyMatrix> seen{TruncatedPolyMatrix::identity(k)};
    std::deque<TruncatedPolyMatrix> todo{TruncatedPolyMatrix::identity(k)};
    while (!todo.empty()) {
        auto x = todo.front();
        todo.pop_front();
        for (auto& g : gens) {
            auto y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    return cap + 1;
                todo.push_back(y);
            }
        }
    }
    return seen.size();
}

struct SublemmaCandidate {
    Trunc a;
    std::size_t group_order;  // 28 means "more than 27"
    bool divides27;
    bool commutator_cubed_trivial;
    bool commutator_central;
    bool survives() const { return divides27 && commutator_cubed_trivial && commutator_central; }
};

inline std::vector<SublemmaCandidate> sublemma2_candidates(int k)
{
    if (k < 1 || k > Trunc::kMax)
        throw std::invalid_argument("sublemma2: k must be in 1..4");
    std::vector<SublemmaCandidate> out;
    int total = 1;
    for (int i = 0; i < k; ++i)
        total *= 3;
    auto tau = tau_matrix(k);
    auto id = TruncatedPolyMatrix::identity(k);
    for (int idx = 0; idx < total; ++idx) {
        Trunc a = Trunc::from_index(k, idx);
        auto sigma = sigma_matrix(a);
        SublemmaCandidate c{a, closure_size({sigma, tau}, 27), false, false, false};
        c.divides27 = c.group_order <= 27 && 27 % c.group_order == 0;
        auto com = group_commutator(sigma, tau);
        c.commutator_cubed_trivial = com * com * com == id;
        c.commutator_central = com * sigma == sigma * com && com * tau == tau * com;
        out.push_back(c);
    }
    return out;
}

inline std::vector<Trunc> sublemma2_solve(int k)
{
    std::vector<Trunc> sol;
    for (auto& c : sublemma2_candidates(k))
        if (c.survives())
            sol.push_back(c.a);
    return sol;
}

// the a for which [sigma, tau]^3 = 1, alone
inline std::vector<Trunc> commutator_cube_set(int k)
{
    std::vector<Trunc> sol;
    for (auto& c : sublemma2_candidates(k))
        if (c.commutator_cubed_trivial)
            sol.push_back(c.a);
    return sol;
}

inline Verdict sublemma2_verify(int k = 3)
{
    Verdict v;
    v.id = "sublemma2";
    v.citation = "a subgroup of order 27 of GL2(F3[a]/I) containing (1 a; 0 1) and (1 0; 1 1) forces a = 0";
    auto cands = sublemma2_candidates(k);
    Json rows = Json::array();
    std::vector<std::string> sol, cube, cube_expected;
    for (auto& c : cands) {
        Json r;
        r["a"] = c.a.str();
        r["group_order"] = c.group_order > 27 ? Json(">27") : Json(c.group_order);
        r["commutator_cubed_trivial"] = c.commutator_cubed_trivial;
        r["commutator_central"] = c.commutator_central;
        rows.push_back(r);
        if (c.survives())
            sol.push_back(c.a.str());
        if (c.commutator_cubed_trivial)
            cube.push_back(c.a.str());
        if ((c.a * c.a * c.a).is_zero())
            cube_expected.push_back(c.a.str());
    }
    v.quantities["k"] = k;
    v.quantities["candidates"] = rows;
    v.quantities["solutions"] = sol;
    v.quantities["commutator_cube_trivial_set"] = cube;
    v.quantities["cube_zero_set"] = cube_expected;
    bool ok = sol.size() == 1 && sol[0] == "0" && cube == cube_expected;
    v.status = pass_if(ok);
    v.summary = "solution set {" + (sol.empty() ? std::string() : sol[0]) + (sol.size() > 1 ? ", ..." : "") +
                "} over " + std::to_string(cands.size()) + " candidates; [sigma,tau]^3 = 1 exactly when a^3 = 0";
    return v;
}

} // namespace semiaudit::groups

#endif
