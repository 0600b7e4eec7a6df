#ifndef SEMIAUDIT_CFT_FIXTURE_HPP
#define SEMIAUDIT_CFT_FIXTURE_HPP

#include "semiaudit/exactnum/numfield.hpp"
#include "semiaudit/exactnum/zfactor.hpp"
#include "semiaudit/verdict.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#ifndef SEMIAUDIT_DEFAULT_FIXTURES
#define SEMIAUDIT_DEFAULT_FIXTURES "data/fixtures.json"
#endif

namespace semiaudit {

struct UnitFixture {
    std::string name;
    AlgebraicNumber value;
};

// number-field data that cannot be recomputed here: class numbers and unit generators.
// Everything else (irreducibility, unit norms, prime shifts) is rechecked by validate_fixture.
struct FieldFixture {
    std::string label;
    std::string note;
    FieldPtr field;
    std::optional<long> h;
    std::string h_source;
    std::vector<UnitFixture> units;
    std::vector<PrimeIdealRep> primes;
    std::vector<std::size_t> conductor_primes;
    unsigned conductor_exponent = 1;

    std::size_t degree() const { return field->degree(); }
    AlgebraicNumber minus_one() const { return AlgebraicNumber::constant(field, Rat(-1)); }
    const UnitFixture& unit(const std::string& name) const
    {
        for (auto& u : units)
            if (u.name == name)
                return u;
        throw std::out_of_range("fixture " + label + " has no unit named " + name);
    }
};

// multiplicity of (x - s) in f mod p
inline unsigned root_multiplicity(const ZPoly& f, std::uint64_t p, std::uint64_t s)
{
    FpPoly g = FpPoly::from_z(f, p);
    FpPoly lin(p, {(p - s % p) % p, 1});
    unsigned m = 0;
    while (!g.is_zero()) {
        FpPoly q, r;
        divmod(g, lin, q, r);
        if (!r.is_zero())
            break;
        g = q;
        ++m;
    }
    return m;
}

// e for (p, v - s): the Newton polygon of f(x + s) is a single segment of height 1 when
// v_p(f(s)) = 1, so the prime is unique over that root with e equal to the multiplicity
inline unsigned claimed_ramification(const ZPoly& f, std::uint64_t p, long s)
{
    unsigned m = root_multiplicity(f, p, static_cast<std::uint64_t>(((s % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)));
    if (m <= 1)
        return m;
    BigInt fs = f.eval(BigInt(s));
    if (fs != 0 && valuation(Rat(fs), BigInt(static_cast<unsigned long>(p))) == 1)
        return m;
    return 1;
}

inline FieldFixture parse_fixture(const Json& j)
{
    FieldFixture fx;
    fx.label = j.at("label").get<std::string>();
    fx.note = j.value("note", "");
    ZPoly f = parse_zpoly(j.at("poly").get<std::vector<std::string>>());
    fx.field = std::make_shared<const NumberField>(f, fx.label);
    if (!j.at("h").is_null())
        fx.h = j.at("h").get<long>();
    fx.h_source = j.at("h_source").get<std::string>();
    if (fx.h_source.empty())
        throw std::invalid_argument("fixture " + fx.label + ": h_source is mandatory");
    for (auto& u : j.at("units")) {
        std::vector<Rat> c;
        for (auto& s : u.at("coords"))
            c.push_back(parse_rat(s.get<std::string>()));
        fx.units.push_back({u.at("name").get<std::string>(), AlgebraicNumber(fx.field, std::move(c))});
    }
    for (auto& pr : j.at("primes")) {
        PrimeIdealRep rep;
        rep.p = pr.at("p").get<std::uint64_t>();
        long s = pr.at("shift").get<long>();
        rep.shift = Rat(s);
        rep.claimed_e = std::max(1u, claimed_ramification(f, rep.p, s));
        fx.primes.push_back(rep);
    }
    auto& cond = j.at("conductor");
    for (auto& i : cond.at("prime_indices")) {
        auto k = i.get<std::size_t>();
        if (k >= fx.primes.size())
            throw std::out_of_range("fixture " + fx.label + ": conductor prime index out of range");
        fx.conductor_primes.push_back(k);
    }
    fx.conductor_exponent = cond.at("exponent").get<unsigned>();
    return fx;
}

struct FixtureSet {
    std::string path;
    std::vector<FieldFixture> fields;

    const FieldFixture& get(const std::string& label) const
    {
        for (auto& f : fields)
            if (f.label == label)
                return f;
        throw std::out_of_range("no fixture labelled " + label);
    }
    bool has(const std::string& label) const
    {
        for (auto& f : fields)
            if (f.label == label)
                return true;
        return false;
    }
};

inline std::string default_fixture_path()
{
    if (const char* e = std::getenv("AUDIT_FIXTURES"); e && *e)
        return e;
    return SEMIAUDIT_DEFAULT_FIXTURES;
}

inline FixtureSet load_fixtures(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open fixture file " + path);
    Json j = Json::parse(in);
    FixtureSet s;
    s.path = path;
    for (auto& f : j.at("fields"))
        s.fields.push_back(parse_fixture(f));
    return s;
}

// rechecks the parts of a fixture that are decidable: f irreducible and totally complex,
// units of norm +-1, listed primes are roots mod p, conductor exponent within e
inline Verdict validate_fixture(const FieldFixture& fx)
{
    Verdict v;
    v.id = "fixture-" + fx.label;
    v.citation = "fixture data for " + fx.label;
    const ZPoly& f = fx.field->poly();
    Json& q = v.quantities;
    q["degree"] = fx.degree();
    bool irr = is_irreducible_q(f);
    int real = count_real_roots(to_q(f));
    q["irreducible"] = irr;
    q["real_roots"] = real;
    bool ok = irr && real == 0;

    Json units = Json::array();
    for (auto& u : fx.units) {
        Rat n = u.value.norm();
        units.push_back({{"name", u.name}, {"norm", to_string(n)}});
        ok = ok && (n == 1 || n == -1);
    }
    q["units"] = units;

    Json primes = Json::array();
    for (auto& pr : fx.primes) {
        bool root = FpPoly::from_z(f, pr.p).eval(rat_mod(pr.shift, pr.p)) == 0;
        primes.push_back({{"p", pr.p}, {"shift", to_string(pr.shift)}, {"e", pr.claimed_e}, {"root", root}});
        ok = ok && root;
    }
    q["primes"] = primes;
    for (auto i : fx.conductor_primes)
        ok = ok && fx.conductor_exponent <= fx.primes[i].claimed_e;
    q["conductor_exponent"] = fx.conductor_exponent;
    q["h"] = fx.h ? Json(*fx.h) : Json(nullptr);
    q["h_source"] = fx.h_source;

    v.status = pass_if(ok);
    v.summary = ok ? "fixture consistent" : "fixture failed a decidable check";
    return v;
}

} // namespace semiaudit

#endif
