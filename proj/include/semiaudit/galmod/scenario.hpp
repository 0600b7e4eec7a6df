#ifndef SEMIAUDIT_GALMOD_SCENARIO_HPP
#define SEMIAUDIT_GALMOD_SCENARIO_HPP

#include "semiaudit/cft/kummer.hpp"
#include "semiaudit/galmod/module.hpp"
#include "semiaudit/groupcheck/truncated.hpp"

#include <numeric>

namespace semiaudit::galmod {

enum class Branch { Mixed, Toric };

inline const char* to_string(Branch b) { return b == Branch::Mixed ? "mixed" : "toric"; }

struct PrimeState {
    unsigned long p;
    int t, a;
    long ord_phi;  // relative to the starting variety
    int stage;
};

struct IsogenyState {
    int d;
    std::vector<PrimeState> primes;

    PrimeState& at(unsigned long p)
    {
        for (auto& s : primes)
            if (s.p == p)
                return s;
        throw std::out_of_range("IsogenyState: unknown prime");
    }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["d"] = d;
        for (auto& s : primes)
            j["p" + std::to_string(s.p)] = {{"t", s.t}, {"a", s.a}, {"ord_phi", s.ord_phi}, {"stage", s.stage}};
        return j;
    }
};

struct AuditTrace {
    nlohmann::ordered_json header;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    std::string terminal = "NONE";
    bool failed = false;

    void add(const std::string& claim, const std::string& citation, nlohmann::ordered_json inputs,
             nlohmann::ordered_json result, Status s)
    {
        nlohmann::ordered_json j;
        j["index"] = steps.size() + 1;
        j["claim"] = claim;
        j["citation"] = citation;
        j["inputs"] = std::move(inputs);
        j["result"] = std::move(result);
        j["verdict"] = to_string(s);
        steps.push_back(std::move(j));
        if (s == Status::Fail)
            failed = true;
    }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j = header;
        j["steps"] = steps;
        j["terminal"] = terminal;
        return j;
    }
};

struct ScenarioOptions {
    int fuel = 32;           // bound on isogeny steps standing in for Faltings finiteness
    int embedding_block = 0; // which conjugate of the lower block is taken as inertia-fixed
    int mixed_rounds = 64;
};

namespace detail {

inline Mat random_rank(std::mt19937& rng, int p, int n, int r)
{
    Mat diag(p, n, n);
    for (int i = 0; i < r; ++i)
        diag.at(i, i) = 1;
    return random_invertible(rng, p, n) * diag * random_invertible(rng, p, n);
}

inline long euler_phi(long n)
{
    long r = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            r -= r / p;
        }
    if (n > 1)
        r -= r / n;
    return r;
}

} // namespace detail

// Replays the isogeny chase on a modeled A[ell] = mu^d (+) lower block with the Galois action of
// Gal(Q(zeta_ell, m^{1/ell})/Q): tau = (chi Id 0; 0 Id), sigma = (Id N; 0 Id).
inline AuditTrace run_scenario(int N, Branch branch, int d, const ScenarioOptions& opt = {})
{
    if (N != 6 && N != 10)
        throw std::invalid_argument("run_scenario: N must be 6 or 10");
    if (d < 1)
        throw std::invalid_argument("run_scenario: d >= 1 required");
    const int ell = N == 6 ? 5 : 3;
    const int chi = 2;  // tau acts on mu_ell through an element of order ell - 1
    const unsigned long p0 = 2, p1 = N == 6 ? 3 : 5;
    const unsigned long q = N == 6 ? 7 : 3;
    const int a0 = branch == Branch::Mixed ? 1 : 0;
    std::mt19937 rng(static_cast<unsigned>(1000003 * N + 7919 * (branch == Branch::Mixed) + d));

    AuditTrace tr;
    tr.header["N"] = N;
    tr.header["ell"] = ell;
    tr.header["branch"] = to_string(branch);
    tr.header["d"] = d;
    tr.header["good_prime_q"] = q;
    tr.header["embedding_block"] = opt.embedding_block;
    tr.header["fuel"] = opt.fuel;

    // for N = 10 the symmetry t_2 = t_5 puts both primes in the same configuration
    const int a1 = N == 10 ? a0 : 0;
    IsogenyState st{d, {{p0, d - a0, a0, 0, 1}, {p1, d - a1, a1, 0, 1}}};
    const int n2 = 2 * d;
    Subspace mu = Subspace::coordinate(ell, n2, 0, d);
    Subspace lower = Subspace::coordinate(ell, n2, d, n2);
    Mat id = Mat::identity(ell, d), zero(ell, d, d);
    Mat tau = Mat::blocks(id.scaled(chi), zero, zero, id);

    tr.add("inertia acts unipotently and gives 0 <= M2(p) <= M1(p) with dims t_p and d + a_p",
           "Grothendieck: rank two unipotent inertia on the Tate module", {{"d", d}},
           st.to_json(), Status::Assumed);

    // filtration at p0: M1 contains the lower block; in the mixed case also a line of mu
    std::vector<Vec> m1_extra;
    Subspace kappa0(ell, n2);
    if (a0) {
        Vec v = random_vec(rng, ell, n2);
        for (int i = d; i < n2; ++i)
            v[i] = 0;
        if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
            v[0] = 1;
        m1_extra.push_back(v);
        kappa0 = Subspace(ell, n2, m1_extra);
    }
    auto m1_at_p0 = [&]() {
        auto b = lower.basis();
        b.insert(b.end(), m1_extra.begin(), m1_extra.end());
        return Subspace(ell, n2, b);
    };
    auto m2_at_p0 = [&]() {
        std::vector<Vec> b(lower.basis().begin(), lower.basis().begin() + (d - a0));
        return Subspace(ell, n2, b);
    };
    Filtration f0(m2_at_p0(), m1_at_p0(), d - a0, a0);

    // maximality of ord Phi at p0: kappa = module generated by M1(p0)
    int rank = static_cast<int>(rng() % static_cast<unsigned>(d));
    Mat nd = detail::random_rank(rng, ell, d, rank);
    int fuel = opt.fuel;
    for (;;) {
        Mat sigma = Mat::blocks(id, nd, zero, id);
        GaloisModule m(ell, n2, {{"sigma", sigma}, {"tau", tau}},
                       {{{{"sigma", ell}}, {}}, {{{"tau", ell - 1}}, {}},
                        {{{"tau", 1}, {"sigma", 1}, {"tau", -1}}, {{"sigma", chi}}}},
                       {{p1, {"sigma"}}});
        Subspace kappa = generated_submodule(f0.m1.basis(), m);
        auto dr = component_delta(kappa, f0);
        bool identity_ok = dr.delta == 2 * d - kappa.dim();
        nlohmann::ordered_json in{{"rank_N", nd.rank()}, {"dim_M1", f0.m1.dim()}};
        nlohmann::ordered_json res{{"dim_kappa", kappa.dim()}, {"delta", dr.delta}, {"equals_2d_minus_dim", identity_ok}};
        if (!identity_ok || dr.delta < 0) {
            tr.add("ord Phi change for kappa containing M1 equals 2d - dim kappa", "this quantity equals 2d - dim kappa >= 0",
                   in, res, Status::Fail);
            return tr;
        }
        if (dr.delta == 0) {
            tr.add("ord Phi maximal: kappa = A[ell], A[ell] unramified at " + std::to_string(p0),
                   "after a finite number of isogenies A'[ell] = kappa", in, res, Status::Pass);
            break;
        }
        st.at(p0).ord_phi += dr.delta;
        res["state"] = st.to_json();
        tr.add("isogeny by kappa strictly increases ord Phi", "this quantity equals 2d - dim kappa >= 0", in, res,
               Status::Pass);
        if (--fuel == 0) {
            tr.add("finiteness of the isogeny class bounds the chain", "Faltings finiteness", {{"fuel", opt.fuel}},
                   {{"exhausted", true}}, Status::Fail);
            tr.terminal = "FUEL_EXHAUSTED";
            return tr;
        }
        // the successor A' = A/kappa is not computed; it is modeled by a module whose N has one more rank
        nd = detail::random_rank(rng, ell, d, std::min(d, nd.rank() + 1));
        tr.add("successor variety A/kappa modeled by the next module in the chain", "Faltings finiteness",
               {{"fuel_left", fuel}}, {{"rank_N", nd.rank()}}, Status::Assumed);
    }
    Mat sigma = Mat::blocks(id, nd, zero, id);

    tr.add("exact sequence 0 -> mu^m -> A[ell] -> (Z/ell)^n -> 0 with m + n = 2d",
           N == 6 ? "finite flat group schemes over Z[1/p] of ell-power order are filtered by Z/ell and mu_ell"
                  : "the same filtration over Z[1/10] for 3-power order",
           {{"two_d", n2}}, {{"m_plus_n", n2}}, Status::Assumed);
    {
        auto pv = prank_bound(d, d, d);
        long m = n2 - d;
        tr.add("m = n = d and A is ordinary at " + std::to_string(ell), pv.citation,
               {{"n_le_d", true}, {"m_le_d", true}, {"m_plus_n", n2}}, {{"m", m}, {"n", d}, {"ordinary", pv.quantities["ordinary"]}},
               pv.status);
    }

    if (N == 10) {
        // closure over D_p and sigma in I_p' with (sigma - 1)^2 = 0
        int t = st.at(p0).t;
        if (t > 0) {
            // sigma - 1 sends P_i to the i-th vector of the lower block and kills the rest
            Mat s41 = Mat::identity(ell, n2);
            for (int i = 0; i < t; ++i)
                s41.at(d + i, i) = 1;
            GaloisModule m41(ell, n2, {{"sigma", s41}, {"d_p", Mat::scalar(ell, n2, chi)}});
            std::vector<Vec> pts(mu.basis().begin(), mu.basis().begin() + t);
            auto cl = lemma41_closure(pts, s41, m41);
            int img = (s41 - Mat::identity(ell, n2)).rank();
            tr.add("span{P_i, (sigma-1)P_i} is a Galois module; sigma^2 = 2(sigma-1) + 1",
                   "is a Gal(Qbar/Q) module", {{"t", t}},
                   {{"dim", cl.span.dim()}, {"stable", cl.stable}, {"square_identity", cl.square_identity}},
                   pass_if(cl.stable && cl.square_identity && cl.span.dim() <= 2 * t));
            tr.add("dim kappa = 2 t_p at maximality and rank(sigma - 1) <= t_p' force t_2 = t_5",
                   "this immediately proves that t_p <= t_p'",
                   {{"dim_kappa", cl.span.dim()}, {"rank_sigma_minus_1", img}},
                   {{"t_2", st.at(p0).t}, {"t_5", st.at(p1).t}, {"equal", st.at(p0).t == st.at(p1).t}},
                   pass_if(cl.span.dim() == 2 * t && img <= st.at(p1).t && st.at(p0).t == st.at(p1).t));
        }
        tr.add("the displayed difference mixes ord_3 and ord_5; read as ord_3 on both sides", "ord_3 - ord_5 display",
               {}, {{"reading", "ord_3(Phi_A'(p)) - ord_3(Phi_A(p))"}}, Status::ErratumNoted);
        tr.add("A[3] = M2hat(p) + (M1(p) \\ M2(p)) read with a chosen complement of M2(p) in M1(p)",
               "set-minus decomposition", {}, {{"complement_dim", st.at(p0).a}}, Status::ErratumNoted);
        auto sl = groups::sublemma2_solve(3);
        std::vector<std::string> sols;
        for (auto& x : sl)
            sols.push_back(x.str());
        tr.add("inertia at p acts trivially: a = 0 in the order-27 matrix group", "then a = 0", {{"k", 3}},
               {{"solutions", sols}}, pass_if(sols == std::vector<std::string>{"0"}));
    }

    if (branch == Branch::Mixed) {
        Subspace kappa = f0.m1.intersect(mu);
        bool stable = kappa.stable_under(sigma) && kappa.stable_under(tau);
        auto dr = component_delta(kappa, f0);
        tr.add("kappa = M1(p) meet mu^d is a non-trivial diagonalizable submodule; ord Phi stays maximal",
               "the last two terms cancel",
               {{"a_p", a0}, {"dim_M1", f0.m1.dim()}},
               {{"dim_kappa", kappa.dim()}, {"galois_stable", stable}, {"delta", dr.delta}},
               pass_if(kappa.dim() >= a0 && kappa.dim() > 0 && stable && dr.delta == 0));
        if (!(kappa.dim() > 0 && dr.delta == 0))
            return tr;
        long phi = detail::euler_phi(N);
        bool coprime = std::gcd(phi, static_cast<long>(ell)) == 1;
        tr.add("extensions of diagonalizable ell-power group schemes over Z[1/N] are diagonalizable",
               "(Z/NZ)^* has order coprime to ell", {{"N", N}}, {{"phi_N", phi}, {"coprime_to_ell", coprime}},
               pass_if(coprime));
        tr.add("each A^(n) again satisfies the maximal configuration", "we may repeat this process", {}, {},
               Status::Assumed);
        nlohmann::ordered_json dims = nlohmann::ordered_json::array();
        long prev = 0;
        for (int n = 1; n <= opt.mixed_rounds; ++n) {
            long dim_n = static_cast<long>(n) * kappa.dim();
            if (dim_n <= prev) {
                tr.add("kernels kappa_n grow", "larger and larger kernels kappa_n", {}, {{"dims", dims}}, Status::Fail);
                return tr;
            }
            prev = dim_n;
            dims.push_back(dim_n);
            auto [over, ev] = exceeds_weil_bound(ell, dim_n, q, d);
            if (over) {
                tr.add("kernels kappa_n strictly increase", "larger and larger kernels kappa_n", {},
                       {{"log_ell_order", dims}}, Status::Pass);
                ev["round"] = n;
                tr.add("constant subgroup of order ell^" + std::to_string(dim_n) + " exceeds #A(F_q) <= (1+sqrt q)^(2d)",
                       "uniform boundedness of the number of points locally", {{"q", q}, {"d", d}}, ev, Status::Pass);
                tr.terminal = "BOUNDED_POINTS";
                return tr;
            }
        }
        tr.add("kernels never exceed the point bound within the round limit", "uniform boundedness", {},
               {{"rounds", opt.mixed_rounds}}, Status::Fail);
        return tr;
    }

    // purely toric
    {
        auto r = lemma24_module(d, nd, ell, chi);
        tr.add("Mhat(" + std::to_string(p1) + ") = mu^d", "Mhat(3) = mu_5^d",
               {{"N", nd.to_json()}, {"chi", chi}},
               {{"generates", r.generates}, {"N_invertible", r.n_invertible}, {"disjoint", r.disjoint},
                {"unramified_submodule_is_mu", r.inertia_fixed_is_mu}},
               pass_if(r.generates && r.n_invertible && r.disjoint && r.inertia_fixed_is_mu));
        if (!r.inertia_fixed_is_mu)
            return tr;
    }
    Filtration f1(mu, mu, d, 0);
    {
        auto dr = component_delta(mu, f1);
        st.at(p1).ord_phi += dr.delta;
        st.at(p1).stage += dr.stage_increment ? 1 : 0;
        tr.add("isogeny by mu^d raises the effective stage of inertia at " + std::to_string(p1),
               "i(A', ell, p) = i(A, ell, p) + 1", {{"dim_kappa", d}},
               {{"delta", dr.delta}, {"stage_increment", dr.stage_increment}, {"state", st.to_json()}},
               pass_if(dr.stage_increment && dr.delta >= 0));
    }
    tr.add("exact sequence 0 -> (Z/ell)^d -> A'[ell] -> mu^d -> 0", "there exists an exact sequence", {}, {},
           Status::Assumed);
    {
        std::vector<unsigned long> bad{p0, p1};
        nlohmann::ordered_json passing = nlohmann::ordered_json::array();
        bool ramified_at_p1 = true;
        for (auto& line : kummer_lines(bad, ell))
            if (unramified_criterion(line.value, ell)) {
                passing.push_back(line.value.get_str());
                ramified_at_p1 = ramified_at_p1 && line.exps[1] % ell != 0;
            }
        std::string expect = N == 6 ? "18" : "10";
        bool ok = passing.size() == 1 && passing[0] == expect && ramified_at_p1;
        tr.add("A[ell] is defined over Q(zeta_ell): the only Kummer class unramified above ell is ramified at " +
                   std::to_string(p1),
               N == 6 ? "the maximal extension of Q(zeta_5) inside K unramified at 1 - zeta_5 is Q(zeta_5, 18^(1/5))"
                      : "the maximal unramified extension of Q(zeta_3) inside H is Q(zeta_3, 10^(1/3))",
               {{"bad_primes", bad}, {"ell", ell}}, {{"unramified_classes", passing}, {"ramified_at_p1", ramified_at_p1}},
               pass_if(ok));
    }
    {
        auto dr = component_delta(mu, f1);
        st.at(p1).stage += dr.stage_increment ? 1 : 0;
        tr.add("isogeny by kappa = M(" + std::to_string(p1) + ") raises the stage again",
               "i(A', ell, p) = i(A, ell, p) + 1 >= 3", {}, {{"stage_increment", dr.stage_increment}, {"state", st.to_json()}},
               pass_if(dr.stage_increment && st.at(p1).stage >= 3));
    }
    tr.add("filtration 0 -> M -> A[ell^2] -> C -> 0 with M diagonalizable and C constant, #C #M = ell^(4g)",
           "by the filtration theorem there exists a filtration", {{"g", d}}, {{"log_ell_order", 4 * d}}, Status::Assumed);
    {
        auto w = weil_compare(ell, 4, q);
        w.evidence["g"] = d;
        tr.add("ell^(4g) <= (1 + sqrt q)^(4g) fails", N == 6 ? "since 5 > 1 + sqrt 7" : "3^(4g) <= (1 + sqrt 3)^(4g) is not true",
               {{"ell", ell}, {"q", q}, {"g", d}}, w.evidence, pass_if(w.violation));
        if (w.violation)
            tr.terminal = "WEIL";
    }
    return tr;
}

} // namespace semiaudit::galmod

#endif
