#ifndef SEMIAUDIT_DISCBOUND_DISCBOUND_HPP
#define SEMIAUDIT_DISCBOUND_DISCBOUND_HPP

#include "semiaudit/discbound/odlyzko.hpp"
#include "semiaudit/verdict.hpp"

#include <numeric>
#include <set>
#include <vector>

namespace semiaudit {

// ell^{1 + 1/(ell-1)} prod_{p in bad} p^{1 - 1/ell}
inline RadicalMonomial fontaine_cap(unsigned long ell, const std::set<unsigned long>& bad)
{
    if (bad.count(ell))
        throw std::invalid_argument("fontaine_cap: ell must not be a bad prime");
    RadicalMonomial m = RadicalMonomial::prime_power(ell, 1 + make_rat(1, static_cast<long>(ell) - 1));
    for (auto p : bad)
        m *= RadicalMonomial::prime_power(p, 1 - make_rat(1, static_cast<long>(ell)));
    return m;
}

struct PrimeRecord {
    unsigned long p;
    long e, f, r;
    long v;                // exponent of the prime in the different
    long base_primes = 1;  // primes of the base over p, all of residue degree base_f
    long base_f = 1;
};

class RamificationProfile {
public:
    RamificationProfile(long base_degree, long ext_degree, std::vector<PrimeRecord> recs)
        : base_degree_(base_degree), ext_degree_(ext_degree), recs_(std::move(recs))
    {
        if (base_degree < 1 || ext_degree < 1)
            throw std::invalid_argument("RamificationProfile: degrees must be positive");
        for (auto& r : recs_) {
            if (r.e < 1 || r.f < 1 || r.r < 1 || r.base_primes < 1 || r.base_f < 1)
                throw std::invalid_argument("RamificationProfile: non-positive e, f or r");
            if (r.e * r.f * r.r != ext_degree)
                throw std::invalid_argument("RamificationProfile: e*f*r differs from the extension degree");
            if (r.base_primes * r.base_f > base_degree)
                throw std::invalid_argument("RamificationProfile: too many base primes");
            if (r.v < r.e - 1)
                throw std::invalid_argument("RamificationProfile: different exponent below e-1");
            bool tame = std::gcd(r.e, static_cast<long>(r.p)) == 1;
            if (tame && r.v != r.e - 1)
                throw std::invalid_argument("RamificationProfile: tame prime needs v = e-1");
            if (!tame && r.v == r.e - 1)
                throw std::invalid_argument("RamificationProfile: wild prime needs v > e-1");
        }
    }

    static RamificationProfile tame(long base_degree, long ext_degree, unsigned long p, long e, long f, long base_primes,
                                    long base_f = 1)
    {
        return RamificationProfile(base_degree, ext_degree,
                                   {{p, e, f, ext_degree / (e * f), e - 1, base_primes, base_f}});
    }

    long base_degree() const { return base_degree_; }
    long ext_degree() const { return ext_degree_; }
    long total_degree() const { return base_degree_ * ext_degree_; }
    const std::vector<PrimeRecord>& records() const { return recs_; }

    const PrimeRecord& record(unsigned long p) const
    {
        for (auto& r : recs_)
            if (r.p == p)
                return r;
        throw std::out_of_range("no record for prime " + std::to_string(p));
    }

    // ord_p N_{base/Q}(disc of the extension)
    long disc_exponent(unsigned long p) const
    {
        auto& r = record(p);
        return r.base_primes * r.base_f * r.r * r.f * r.v;
    }

private:
    long base_degree_, ext_degree_;
    std::vector<PrimeRecord> recs_;
};

inline long tame_disc_exponent(const RamificationProfile& prof, unsigned long p)
{
    auto& r = prof.record(p);
    if (std::gcd(r.e, static_cast<long>(p)) != 1)
        throw std::invalid_argument("tame_disc_exponent: wild record");
    return r.base_primes * r.base_f * r.r * r.f * (r.e - 1);
}

// delta_base * disc_norm^{1/n}
inline RadicalMonomial compose_root_disc(const RadicalMonomial& delta_base, const RadicalMonomial& disc_norm, long n)
{
    if (n < 1)
        throw std::invalid_argument("compose_root_disc: total degree must be >= 1");
    return delta_base * disc_norm.pow(make_rat(1, n));
}

struct DegreeBound {
    bool bounded = false;
    long strict_upper = 0;  // [L:Q] < strict_upper
    Rat row_bound;
};

// smallest tabulated degree whose bound exceeds delta
inline DegreeBound odlyzko_max_degree(const RadicalMonomial& delta, const OdlyzkoTable& table)
{
    for (auto& row : table.rows())
        if (exact_compare(delta, row.bound) == Ordering::Less)
            return {true, row.degree, row.bound};
    return {};
}

struct ExponentCap {
    Rat value;
    bool inclusive = false;
};

// v = e-1 mod (ell-1), v > e-1, v under the cap
inline std::set<long> wild_exponent_candidates(unsigned long ell, long e, const ExponentCap& cap)
{
    if (e < 1 || e % static_cast<long>(ell) != 0)
        throw std::invalid_argument("wild_exponent_candidates: ell must divide e");
    std::set<long> out;
    long m = static_cast<long>(ell) - 1;
    for (long v = e; Rat(v) < cap.value || (cap.inclusive && Rat(v) == cap.value); ++v)
        if (((v - (e - 1)) % m + m) % m == 0)
            out.insert(v);
    return out;
}

// the ell-1 non-trivial characters of a cyclic group of prime order share one conductor exponent
inline long conductor_from_disc(long disc_exponent, unsigned long ell)
{
    if (!is_prime(BigInt(ell)))
        throw std::invalid_argument("conductor_from_disc: group order must be prime");
    long m = static_cast<long>(ell) - 1;
    if (disc_exponent < 0 || disc_exponent % m != 0)
        throw std::invalid_argument("conductor_from_disc: exponent not divisible by ell-1");
    return disc_exponent / m;
}

inline Json monomial_json(const RadicalMonomial& m)
{
    Json j;
    j["monomial"] = m.str();
    j["approx"] = static_cast<double>(m.approx());
    return j;
}

// the "delta < bound" comparison stored with the integers that decide it
inline Json comparison_json(const RadicalMonomial& x, const Rat& t)
{
    BigInt B = x.clearing_power();
    auto [num, den] = x.raised(B);
    Json j;
    j["lhs"] = x.str();
    j["rhs"] = t.get_str();
    j["power"] = B.get_str();
    j["lhs_pow_num_times_rhs_den_pow"] = BigInt(num * ipow(t.get_den(), B.get_ui())).get_str();
    j["rhs_num_pow_times_lhs_pow_den"] = BigInt(den * ipow(t.get_num(), B.get_ui())).get_str();
    j["ordering"] = to_string(exact_compare(x, t));
    return j;
}

// Wild window setup: [L:K] = ext_degree over a base of degree base_degree with root discriminant
// delta_base, and base_primes primes of norm p over p; N(disc L/K) = p^{base_primes * k}, k = f*r*v.
struct WindowConfig {
    RadicalMonomial delta_base;
    long base_degree;
    long ext_degree;
    unsigned long p;
    long base_primes;
    RadicalMonomial cap;  // strict upper bound on delta_L
};

// facts about the only candidate group needed to refute e in {6, 12}
struct GroupObstructions {
    bool has_normal_subgroup_index2 = true;  // a normal subgroup of order [L:K]/2 exists
    bool has_normal_sylow = true;            // a normal p-Sylow subgroup exists
    std::string group_label;
};

inline Verdict disc_window_check(const WindowConfig& cfg, const OdlyzkoTable& table, const GroupObstructions& obs)
{
    Verdict v;
    v.id = "disc-window";
    long n = cfg.base_degree * cfg.ext_degree;
    auto row = table.row_at_most(n);
    if (!row) {
        v.status = Status::Fail;
        v.summary = "no tabulated bound at or below degree " + std::to_string(n);
        return v;
    }
    auto delta_for = [&](long k) {
        return compose_root_disc(cfg.delta_base,
                                 RadicalMonomial::prime_power(cfg.p, Rat(cfg.base_primes * k)), n);
    };
    std::vector<long> survivors;
    Json scan = Json::array();
    long k = 0;
    for (;; ++k) {
        RadicalMonomial d = delta_for(k);
        bool below_table = exact_compare(d, row->bound) != Ordering::Greater;
        bool at_cap = exact_compare(d, cfg.cap) != Ordering::Less;
        if (at_cap) {
            Json s;
            s["k"] = k;
            s["delta"] = d.str();
            s["refuted_by"] = "cap";
            scan.push_back(s);
            break;
        }
        if (!below_table)
            survivors.push_back(k);
    }
    long lo = survivors.empty() ? -1 : survivors.front();
    long hi = survivors.empty() ? -1 : survivors.back();
    Json& q = v.quantities;
    q["degree"] = n;
    q["table_row"] = {{"degree", row->degree}, {"bound", row->bound.get_str()}};
    q["surviving_frv"] = survivors;
    if (lo >= 1) {
        RadicalMonomial below = delta_for(lo - 1);
        q["largest_refuted_below"] = comparison_json(below, row->bound);
        q["norm_window"] = {{"min_exponent", cfg.base_primes * lo}, {"max_exponent", cfg.base_primes * hi}};
    }
    q["first_refuted_above"] = scan.empty() ? Json() : scan.back();

    // case analysis over e with p | e and e | ext_degree
    Json cases = Json::array();
    bool all_refuted = !survivors.empty();
    for (long e = static_cast<long>(cfg.p); e <= cfg.ext_degree; e += static_cast<long>(cfg.p)) {
        if (cfg.ext_degree % e)
            continue;
        long fr = cfg.ext_degree / e;
        Json c;
        c["e"] = e;
        c["fr"] = fr;
        bool divides = false;
        for (long s : survivors)
            if (s % fr == 0)
                divides = true;
        if (!divides) {
            c["refuted"] = true;
            c["reason"] = "f*r = " + std::to_string(fr) + " divides no surviving f*r*v";
        } else if (2 * e == cfg.ext_degree) {
            c["refuted"] = !obs.has_normal_subgroup_index2;
            c["reason"] = "inertia of index 2 is normal; " + obs.group_label +
                          (obs.has_normal_subgroup_index2 ? " has" : " has no") + " normal subgroup of that order";
        } else if (e == cfg.ext_degree) {
            c["refuted"] = !obs.has_normal_sylow;
            c["reason"] = "wild inertia is a normal p-subgroup of G0 = G; " + obs.group_label +
                          (obs.has_normal_sylow ? " has" : " has no") + " normal p-Sylow";
        } else {
            c["refuted"] = false;
            c["reason"] = "no argument available";
        }
        all_refuted = all_refuted && c["refuted"].get<bool>();
        cases.push_back(c);
    }
    q["cases"] = cases;
    v.status = pass_if(all_refuted);
    v.summary = survivors.empty() ? "no admissible discriminant norm"
                                  : "norm window " + std::to_string(cfg.p) + "^" + std::to_string(cfg.base_primes * lo) +
                                        ".." + std::to_string(cfg.p) + "^" + std::to_string(cfg.base_primes * hi) +
                                        (all_refuted ? "; every ramification index refuted" : "; a case survives");
    return v;
}

} // namespace semiaudit

#endif
