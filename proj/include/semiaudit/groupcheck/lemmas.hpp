#ifndef SEMIAUDIT_GROUPCHECK_LEMMAS_HPP
#define SEMIAUDIT_GROUPCHECK_LEMMAS_HPP

#include "semiaudit/groupcheck/catalog.hpp"
#include "semiaudit/verdict.hpp"

#include <numeric>

namespace semiaudit::groups {

inline bool is_power_of(long n, long p)
{
    if (n < 1)
        return false;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

inline Json invariants_json(const FiniteGroup& g)
{
    Json j;
    j["label"] = g.label();
    j["order"] = g.order();
    j["center"] = g.center().size();
    j["derived"] = g.derived_subgroup().size();
    j["abelianization"] = abelianization(g);
    return j;
}

// every group of order 2..9 has |Aut| prime to 5
inline Verdict lemma33_verify()
{
    Verdict v;
    v.id = "lemma33";
    v.citation = "for all groups G' of order less than 10, |Aut(G')| is coprime to 5";
    Json rows = Json::array();
    bool ok = true;
    for (int n = 2; n <= 9; ++n)
        for (auto& g : catalog(n)) {
            long a = automorphism_count(g);
            bool coprime = a % 5 != 0;
            ok = ok && coprime;
            rows.push_back({{"order", n}, {"group", g.label()}, {"aut", a}, {"coprime_to_5", coprime}});
        }
    v.quantities["groups"] = rows;
    v.status = pass_if(ok);
    v.summary = std::to_string(rows.size()) + " groups of order 2..9, every |Aut| prime to 5";
    return v;
}

inline std::vector<Subset> subgroups_of_order(const FiniteGroup& g, int m)
{
    std::vector<Subset> out;
    for (auto& s : all_subgroups(g))
        if (static_cast<int>(s.size()) == m)
            out.push_back(s);
    return out;
}

inline bool fixes_pointwise(const Map& a, const Subset& s)
{
    for (int x : s)
        if (a[x] != x)
            return false;
    return true;
}

// H of order 10, 15 or 20 and G an extension of C5 by H (H normal)
inline Verdict lemma35_verify(const FiniteGroup& h)
{
    int n = h.order();
    if (n != 10 && n != 15 && n != 20)
        throw std::invalid_argument("lemma35_verify: |H| must be 10, 15 or 20");
    Verdict v;
    v.id = "lemma35-" + h.label();
    v.citation = "for H of order 10, 15 or 20, an extension of Z/5 by H has abelianization that is not a 5-group";
    Json& q = v.quantities;
    q["H"] = invariants_json(h);

    // (i) the 5-Sylow is unique: n_5 = 1 mod 5 and n_5 | n/5 < 6
    std::vector<long> allowed;
    for (long c = 1; c <= n / 5; ++c)
        if ((n / 5) % c == 0 && c % 5 == 1)
            allowed.push_back(c);
    auto sylows = subgroups_of_order(h, 5);
    Subset s5 = sylows.front();
    bool normal = h.is_normal(s5);
    q["sylow5_count_allowed"] = allowed;
    q["sylow5_count"] = sylows.size();
    q["sylow5_normal_by_conjugation"] = normal;
    bool ok = sylows.size() == 1 && normal && allowed == std::vector<long>{1};

    // (ii) automorphisms of order dividing 5 move h only inside the Sylow
    auto auts = automorphisms(h);
    auto in_s5 = [&](int x) { return std::binary_search(s5.begin(), s5.end(), x); };
    auto moves_inside = [&](const Map& a) {
        for (int x = 0; x < n; ++x)
            if (!in_s5(h.mul(a[x], h.inv(x))))
                return false;
        return true;
    };
    std::vector<Map> inner;
    for (int g = 0; g < n; ++g) {
        Map c(n);
        for (int x = 0; x < n; ++x)
            c[x] = h.conj(g, x);
        inner.push_back(c);
    }
    long order5 = 0, inner5 = 0, bad = 0, bad_inner = 0, not_fixing = 0;
    for (auto& a : auts) {
        Map a5 = identity_map(n);
        for (int i = 0; i < 5; ++i)
            a5 = compose(a, a5);
        bool is_id = a5 == identity_map(n);
        bool is_inner = std::find(inner.begin(), inner.end(), a5) != inner.end();
        if (is_id) {
            ++order5;
            if (!moves_inside(a))
                ++bad;
            if (!fixes_pointwise(a, s5))
                ++not_fixing;
        }
        if (is_inner) {
            ++inner5;
            if (!moves_inside(a))
                ++bad_inner;
        }
    }
    q["aut_order"] = auts.size();
    q["sigma5_identity_count"] = order5;
    q["sigma5_identity_failures"] = bad;
    q["sigma5_identity_not_fixing_sylow"] = not_fixing;
    q["sigma5_inner_count"] = inner5;
    q["sigma5_inner_failures"] = bad_inner;
    ok = ok && bad == 0;

    // (iii) H'' = H / H' has automorphism group prime to 5
    FiniteGroup hq = quotient(h, s5, "H''");
    long aq = automorphism_count(hq);
    q["quotient_order"] = hq.order();
    q["quotient_aut"] = aq;
    ok = ok && aq % 5 != 0;

    // direct check: every extension C5 by H, built as H.C5
    long ext = 0, ext_bad = 0;
    std::set<std::vector<int>> seen_ab;
    for (auto& a : auts) {
        Map a5 = identity_map(n);
        for (int i = 0; i < 5; ++i)
            a5 = compose(a, a5);
        for (int z = 0; z < n; ++z) {
            if (a[z] != z || a5 != inner[z])
                continue;
            FiniteGroup g = cyclic_extension(h, a, z, 5);
            auto ab = abelianization(g);
            long sz = std::accumulate(ab.begin(), ab.end(), 1L, std::multiplies<long>());
            ++ext;
            if (is_power_of(sz, 5))
                ++ext_bad;
            seen_ab.insert(ab);
        }
    }
    Json abs = Json::array();
    for (auto& ab : seen_ab)
        abs.push_back(ab);
    q["extensions_checked"] = ext;
    q["extension_abelianizations"] = abs;
    q["extensions_with_5group_abelianization"] = ext_bad;
    ok = ok && ext > 0 && ext_bad == 0;

    v.status = pass_if(ok);
    v.summary = "H = " + h.label() + ": normal 5-Sylow, " + std::to_string(order5) +
                " automorphisms with sigma^5 = 1 all satisfy sigma(h)h^-1 in H', " + std::to_string(ext) +
                " extensions checked directly";
    return v;
}

inline Verdict lemma35_verify_all()
{
    Verdict v;
    v.id = "lemma35";
    v.citation = "for H of order 10, 15 or 20, an extension of Z/5 by H has abelianization that is not a 5-group";
    Json parts = Json::array();
    Status s = Status::Pass;
    int count = 0;
    for (int n : {10, 15, 20})
        for (auto& h : catalog(n)) {
            auto r = lemma35_verify(h);
            s = combine(s, r.status);
            parts.push_back(r.to_json());
            ++count;
        }
    v.quantities["groups"] = parts;
    v.status = s;
    v.summary = std::to_string(count) + " groups H of order 10, 15, 20 checked";
    return v;
}

// normal subgroups N with G/N elementary abelian of rank 2
inline std::vector<Subset> kernels_onto_c5c5(const FiniteGroup& g)
{
    std::vector<Subset> out;
    for (auto& nrm : normal_subgroups(g)) {
        if (static_cast<int>(nrm.size()) * 25 != g.order())
            continue;
        FiniteGroup qg = quotient(g, nrm);
        if (qg.is_abelian() && abelian_invariants(qg) == std::vector<int>{5, 5})
            out.push_back(nrm);
    }
    return out;
}

inline Verdict order125_survey()
{
    Verdict v;
    v.id = "order125";
    v.citation = "there are three groups up to isomorphism with this property";
    Json rows = Json::array();
    int surj = 0, with_psi = 0;
    for (auto& g : catalog(125)) {
        Json r;
        r["group"] = g.label();
        auto kers = kernels_onto_c5c5(g);
        r["surjections_up_to_aut"] = kers.size();
        // psi = chi o phi; its kernel is a subgroup of order 25 containing ker phi
        Json per = Json::array();
        bool any = false;
        auto subs25 = subgroups_of_order(g, 25);
        for (auto& k : kers) {
            int good = 0;
            for (auto& s : subs25) {
                if (!std::includes(s.begin(), s.end(), k.begin(), k.end()))
                    continue;
                FiniteGroup sg = subgroup_as_group(g, s);
                if (sg.is_abelian() && abelian_invariants(sg) == std::vector<int>{5, 5})
                    ++good;
            }
            per.push_back(good);
            any = any || good > 0;
        }
        r["psi_with_elementary_kernel_per_surjection"] = per;
        r["psi_exists"] = any;
        if (!kers.empty())
            ++surj;
        if (any)
            ++with_psi;
        rows.push_back(r);
    }
    v.quantities["groups"] = rows;
    v.quantities["surjecting_count"] = surj;
    v.quantities["stated_count"] = 3;
    v.quantities["psi_exists_count"] = with_psi;
    bool consequence = with_psi == surj;
    if (!consequence)
        v.status = Status::Fail;
    else
        v.status = surj == 3 ? Status::Pass : Status::ErratumNoted;
    v.summary = std::to_string(surj) + " groups of order 125 surject onto C5xC5 (stated: three); " +
                std::to_string(with_psi) + " of them admit the required psi";
    return v;
}

inline Verdict order27_facts()
{
    Verdict v;
    v.id = "order27";
    v.citation = "[M, M] is of order 3 and central for non-abelian M of order 27";
    Json rows = Json::array();
    bool ok = true;
    int nonab = 0;
    for (auto& g : catalog(27)) {
        auto d = g.derived_subgroup();
        auto z = g.center();
        bool central = std::includes(z.begin(), z.end(), d.begin(), d.end());
        if (!g.is_abelian()) {
            ++nonab;
            ok = ok && d.size() == 3 && central;
        } else {
            ok = ok && d.size() == 1;
        }
        rows.push_back({{"group", g.label()}, {"derived_order", d.size()}, {"central", central}});
    }
    ok = ok && nonab == 2;
    v.quantities["groups"] = rows;
    v.status = pass_if(ok);
    v.summary = std::to_string(nonab) + " non-abelian groups of order 27, each with central derived subgroup of order 3";
    return v;
}

struct Order12Result {
    Verdict verdict;
    bool a4_has_normal_index2 = true;
    bool a4_has_normal_sylow3 = true;
};

inline Order12Result order12_check()
{
    Order12Result res;
    Verdict& v = res.verdict;
    v.id = "order12";
    v.citation = "the only group G of order 12 such that G^ab = Z/3";
    Json rows = Json::array();
    std::vector<std::string> ab3;
    for (auto& g : catalog(12)) {
        auto ab = abelianization(g);
        rows.push_back({{"group", g.label()}, {"abelianization", ab}});
        if (ab == std::vector<int>{3})
            ab3.push_back(g.label());
    }
    const FiniteGroup& a4 = catalog_group(12, "A4");
    res.a4_has_normal_index2 = false;
    res.a4_has_normal_sylow3 = false;
    for (auto& s : normal_subgroups(a4)) {
        if (s.size() == 6)
            res.a4_has_normal_index2 = true;
        if (s.size() == 3)
            res.a4_has_normal_sylow3 = true;
    }
    v.quantities["groups"] = rows;
    v.quantities["abelianization_c3"] = ab3;
    v.quantities["a4_normal_subgroup_order6"] = res.a4_has_normal_index2;
    v.quantities["a4_normal_sylow3"] = res.a4_has_normal_sylow3;
    bool ok = ab3 == std::vector<std::string>{"A4"} && !res.a4_has_normal_index2 && !res.a4_has_normal_sylow3;
    v.status = pass_if(ok);
    v.summary = "A4 is the only group of order 12 with abelianization C3; it has no normal subgroup of order 6 or 3";
    return res;
}

} // namespace semiaudit::groups

#endif
