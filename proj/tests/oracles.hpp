#ifndef SEMIAUDIT_TESTS_ORACLES_HPP
#define SEMIAUDIT_TESTS_ORACLES_HPP

// brute-force oracles shared by the unit tests and the acceptance runner

#include "semiaudit/galmod/scenario.hpp"

#include <random>
#include <string>

namespace oracle {

using namespace semiaudit;
using namespace semiaudit::galmod;

inline Subspace random_subspace_of(std::mt19937& rng, const Subspace& amb, int k)
{
    int p = amb.p(), n = amb.ambient();
    for (;;) {
        std::vector<Vec> vs;
        for (int i = 0; i < k; ++i) {
            Vec v(n, 0);
            for (auto& b : amb.basis()) {
                int c = static_cast<int>(rng() % p);
                for (int j = 0; j < n; ++j)
                    v[j] = (v[j] + c * b[j]) % p;
            }
            vs.push_back(v);
        }
        Subspace s(p, n, vs);
        if (s.dim() == k)
            return s;
    }
}

// every element of s, by enumerating coefficient vectors
inline std::vector<Vec> elements(const Subspace& s)
{
    int p = s.p(), n = s.ambient(), k = s.dim();
    std::vector<Vec> out;
    std::vector<int> c(k, 0);
    for (;;) {
        Vec v(n, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j)
                v[j] = (v[j] + c[i] * s.basis()[i][j]) % p;
        out.push_back(v);
        int i = 0;
        while (i < k && ++c[i] == p)
            c[i++] = 0;
        if (i == k)
            break;
    }
    return out;
}

inline int log_p(long count, int p)
{
    int e = 0;
    while (count > 1) {
        if (count % p)
            return -1;
        count /= p;
        ++e;
    }
    return e;
}

struct DeltaInstance {
    int p, d;
    Subspace m1, m2, kappa;
    int t, a;
};

inline DeltaInstance random_delta_instance(std::mt19937& rng, int p)
{
    int d = 1 + static_cast<int>(rng() % 4);
    int n = 2 * d;
    int t = static_cast<int>(rng() % (d + 1));
    int a = d - t;
    Subspace full = Subspace::full(p, n);
    Subspace m1 = random_subspace_of(rng, full, d + a);
    Subspace m2 = random_subspace_of(rng, m1, t);
    // keep p^dim kappa small enough to enumerate
    int kmax = p == 5 ? std::min(n, 5) : n;
    Subspace kappa = (rng() % 4 == 0) ? m1 : random_subspace_of(rng, full, static_cast<int>(rng() % (kmax + 1)));
    return {p, d, m1, m2, kappa, t, a};
}

struct DeltaCount {
    int delta;
    bool stage;
};

// delta = dim(kappa meet M2) + dim(kappa meet M1) - dim kappa, counted element by element
inline DeltaCount brute_delta(const DeltaInstance& x)
{
    long in2 = 0, in1 = 0;
    bool contains_m2 = true, inside_m1 = true;
    for (auto& v : elements(x.kappa)) {
        bool in_m1 = x.m1.contains(v);
        in2 += x.m2.contains(v);
        in1 += in_m1;
        inside_m1 = inside_m1 && in_m1;
    }
    for (auto& v : elements(x.m2))
        contains_m2 = contains_m2 && x.kappa.contains(v);
    return {log_p(in2, x.p) + log_p(in1, x.p) - x.kappa.dim(), contains_m2 && inside_m1};
}

struct RunResult {
    int instances = 0;
    int mismatches = 0;
    std::string first_mismatch;
};

inline RunResult component_delta_run(int count, unsigned seed)
{
    std::mt19937 rng(seed);
    RunResult r;
    for (int it = 0; it < count; ++it) {
        auto x = random_delta_instance(rng, it % 2 ? 3 : 5);
        auto got = component_delta(x.kappa, Filtration(x.m2, x.m1, x.t, x.a));
        auto want = brute_delta(x);
        ++r.instances;
        if (got.delta != want.delta || got.stage_increment != want.stage) {
            if (!r.mismatches)
                r.first_mismatch = "p=" + std::to_string(x.p) + " d=" + std::to_string(x.d) + " delta " +
                                   std::to_string(got.delta) + " vs " + std::to_string(want.delta);
            ++r.mismatches;
        }
    }
    return r;
}

// G = <sigma, tau> with tau sigma tau^-1 = sigma^2 and H = <sigma>: points fixed by H generate a module fixed by H
inline bool fixed_points_instance(std::mt19937& rng)
{
    const int ell = 5, chi = 2;
    int d = 1 + static_cast<int>(rng() % 4);
    Mat id = Mat::identity(ell, d), zero(ell, d, d);
    Mat nd = random_mat(rng, ell, d, d);
    Mat sigma = Mat::blocks(id, nd, zero, id);
    Mat tau = Mat::blocks(id.scaled(chi), zero, zero, id);
    GaloisModule m(ell, 2 * d, {{"sigma", sigma}, {"tau", tau}});
    auto fixed = (sigma - Mat::identity(ell, 2 * d)).nullspace();
    std::vector<Vec> pts;
    for (auto& v : fixed)
        if (rng() % 2)
            pts.push_back(v);
    if (pts.empty())
        pts.push_back(fixed[0]);
    auto r = generated_submodule_checked(pts, m, {sigma});
    bool ok = r.normal && r.input_fixed && r.output_fixed;
    for (auto& v : pts)
        ok = ok && r.span.contains(v);
    ok = ok && r.span.stable_under(sigma) && r.span.stable_under(tau);
    return ok && generated_submodule(r.span.basis(), m) == r.span;
}

// sigma = 1 + S J S^-1 with J^2 = 0: span{P, (sigma-1)P} is stable and sigma^2 = 2 sigma - 1
inline bool unipotent_span_instance(std::mt19937& rng, int p)
{
    int n = 2 + static_cast<int>(rng() % 7);
    Mat j(p, n, n);
    int r = static_cast<int>(rng() % (n / 2 + 1));
    for (int i = 0; i < r; ++i)
        j.at(n / 2 + i, i) = 1;
    Mat s = random_invertible(rng, p, n);
    Mat sigma = Mat::identity(p, n) + s * j * s.inverse().value();
    if (!unipotent_check(sigma))
        return false;
    GaloisModule m(p, n, {{"sigma", sigma}, {"d_p", Mat::scalar(p, n, 1 + static_cast<int>(rng() % (p - 1)))}});
    std::vector<Vec> pts;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i)
        pts.push_back(random_vec(rng, p, n));
    auto cl = lemma41_closure(pts, sigma, m);
    return cl.stable && cl.square_identity && cl.span.dim() <= 2 * k;
}

// 200 instances: half of each closure property
inline RunResult closure_run(int count, unsigned seed)
{
    std::mt19937 rng(seed);
    RunResult r;
    for (int it = 0; it < count; ++it) {
        bool ok = it % 2 ? fixed_points_instance(rng) : unipotent_span_instance(rng, it % 4 ? 3 : 5);
        ++r.instances;
        if (!ok) {
            if (!r.mismatches)
                r.first_mismatch = "instance " + std::to_string(it);
            ++r.mismatches;
        }
    }
    return r;
}

struct Lemma24Run {
    int matrices = 0;
    int invertible = 0;
    int failures = 0;
};

// every N_d over F_ell with d <= max_d
inline Lemma24Run lemma24_exhaustive(int max_d, int ell = 5)
{
    Lemma24Run out;
    for (int d = 1; d <= max_d; ++d) {
        int cells = d * d, total = 1;
        for (int i = 0; i < cells; ++i)
            total *= ell;
        for (int code = 0; code < total; ++code) {
            Mat nd(ell, d, d);
            for (int i = 0, c = code; i < cells; ++i, c /= ell)
                nd.at(i / d, i % d) = c % ell;
            auto r = lemma24_module(d, nd, ell);
            bool ok = r.generates == r.n_invertible && r.disjoint && (!r.generates || r.inertia_fixed_is_mu) &&
                      lemma24_analyze(d, nd, ell).status == Status::Pass;
            ++out.matrices;
            out.invertible += r.n_invertible;
            out.failures += !ok;
        }
    }
    return out;
}

} // namespace oracle

#endif
