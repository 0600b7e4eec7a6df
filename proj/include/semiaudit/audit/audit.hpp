#ifndef SEMIAUDIT_AUDIT_AUDIT_HPP
#define SEMIAUDIT_AUDIT_AUDIT_HPP

#include "semiaudit/audit/claims.hpp"
#include "semiaudit/version.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <sstream>

namespace semiaudit {

struct AuditConfig {
    int N = 6;
    std::string fixtures_path;  // empty: AUDIT_FIXTURES, then the shipped file
    std::string odlyzko_path;   // empty: built-in rows
    bool grh = true;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ULL)
{
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t x)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return {};
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct AuditReport {
    std::string command;
    Json config = Json::object();
    std::string digest;
    std::vector<Verdict> claims;
    Json notes = Json::array();

    void add(Verdict v)
    {
        for (auto& c : claims)
            if (c.id == v.id)
                throw std::logic_error("duplicate claim id " + v.id);
        claims.push_back(std::move(v));
    }

    bool any(Status s) const
    {
        for (auto& c : claims)
            if (c.status == s)
                return true;
        return false;
    }

    // 0 all pass, 10 conditional, 20 any failure
    int exit_code() const
    {
        if (any(Status::Fail))
            return 20;
        if (any(Status::FixtureConditional) || any(Status::Assumed) || any(Status::Inconclusive))
            return 10;
        return 0;
    }

    std::string overall() const
    {
        switch (exit_code()) {
        case 0: return "PASS";
        case 10: return "CONDITIONAL-PASS";
        default: return "FAIL";
        }
    }

    Json to_json() const
    {
        Json j;
        j["tool"] = "semiaudit";
        j["version"] = SEMIAUDIT_VERSION;
        j["command"] = command;
        j["config"] = config;
        j["config_digest"] = digest;
        Json cs = Json::array();
        for (auto& c : claims)
            cs.push_back(c.to_json());
        j["claims"] = cs;
        if (!notes.empty())
            j["notes"] = notes;
        j["overall"] = overall();
        j["exit_code"] = exit_code();
        return j;
    }

    std::string text() const
    {
        std::ostringstream os;
        os << "semiaudit " << SEMIAUDIT_VERSION << "  " << command << "  digest " << digest << "\n";
        for (auto& c : claims)
            os << "[" << to_string(c.status) << "] " << c.id << ": " << c.summary << "\n";
        for (auto& n : notes)
            os << "note: " << n.get<std::string>() << "\n";
        os << "overall: " << overall() << " (exit " << exit_code() << ")\n";
        return os.str();
    }
};

struct LoadedInputs {
    std::optional<FixtureSet> fixtures;
    std::string fixtures_error;
    std::string fixtures_path;
    std::string fixtures_bytes;
    OdlyzkoTable table = OdlyzkoTable::defaults();
};

// a missing fixture file degrades the dependent claims; a malformed one is a configuration error
inline LoadedInputs load_inputs(const AuditConfig& cfg)
{
    LoadedInputs in;
    in.fixtures_path = cfg.fixtures_path.empty() ? default_fixture_path() : cfg.fixtures_path;
    in.fixtures_bytes = read_file(in.fixtures_path);
    if (in.fixtures_bytes.empty()) {
        in.fixtures_error = "fixture file " + in.fixtures_path + " not readable";
    } else {
        try {
            in.fixtures = load_fixtures(in.fixtures_path);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("bad fixture file: ") + e.what());
        }
    }
    if (!cfg.odlyzko_path.empty()) {
        try {
            in.table = OdlyzkoTable::defaults().merged(OdlyzkoTable::load(cfg.odlyzko_path));
        } catch (const std::exception& e) {
            throw ConfigError(std::string("bad odlyzko table: ") + e.what());
        }
    }
    return in;
}

inline Json config_json(const AuditConfig& cfg, const LoadedInputs& in)
{
    Json j;
    j["N"] = cfg.N;
    j["grh"] = cfg.grh;
    j["fixtures"] = in.fixtures_path;
    j["fixtures_fnv1a"] = hex64(fnv1a(in.fixtures_bytes));
    Json rows = Json::array();
    for (auto& r : in.table.rows())
        rows.push_back({r.degree, r.bound.get_str()});
    j["odlyzko"] = rows;
    return j;
}

inline std::string config_digest(const Json& config) { return hex64(fnv1a(config.dump())); }

// runs a fixture-backed claim; without fixtures the claim is reported conditional
inline Verdict with_fixtures(const LoadedInputs& in, const std::string& id, const std::string& citation,
                             const std::function<Verdict(const FixtureSet&)>& fn)
{
    if (in.fixtures) {
        try {
            return fn(*in.fixtures);
        } catch (const std::out_of_range& e) {
            Verdict v{id, citation, Status::FixtureConditional, Json::object(), std::string("fixture missing: ") + e.what()};
            return v;
        }
    }
    return Verdict{id, citation, Status::FixtureConditional, Json::object(), in.fixtures_error};
}

inline Verdict table_row_claim(const LoadedInputs& in, const TableRow& row)
{
    return with_fixtures(in, "table-" + row.label, "\"Ray Class Fields\" table, row " + row.label,
                         [&](const FixtureSet& fs) { return table_row_check(row, fs); });
}

inline std::vector<Verdict> fixture_claims(const LoadedInputs& in, const std::vector<std::string>& labels)
{
    std::vector<Verdict> out;
    for (auto& l : labels)
        out.push_back(with_fixtures(in, "fixture-" + l, "fixture data for " + l,
                                    [&](const FixtureSet& fs) { return validate_fixture(fs.get(l)); }));
    return out;
}

inline AuditReport run_audit(const AuditConfig& cfg)
{
    ProofSetup s = ProofSetup::for_n(cfg.N);
    LoadedInputs in = load_inputs(cfg);
    AuditReport r;
    r.command = "audit " + std::to_string(cfg.N) + (cfg.grh ? "" : " --without-grh");
    r.config = config_json(cfg, in);
    r.digest = config_digest(r.config);
    if (!in.fixtures_error.empty())
        r.notes.push_back(in.fixtures_error);

    r.add(fontaine_claim(s));
    r.add(degree_bound_claim(s, in.table, cfg.grh));
    if (!cfg.grh) {
        r.notes.push_back("audit stopped at the degree bound: without the GRH no further step applies");
        return r;
    }
    r.add(root_disc_claim(s));
    r.add(structural_assumptions_claim(cfg.N));

    std::vector<std::string> labels;
    if (cfg.N == 6)
        labels = {"Q(zeta5)", "Q(zeta5,2^(1/5))", "Q(zeta5,3^(1/5))", "Q(zeta5,6^(1/5))",
                  "Q(zeta5,12^(1/5))", "Q(zeta5,24^(1/5))", "Q(zeta5,48^(1/5))"};
    else
        labels = {"Q(sqrt-3,10^(1/3))", "Q(zeta3,2^(1/3),5^(1/3))"};
    for (auto& v : fixture_claims(in, labels))
        r.add(std::move(v));

    if (cfg.N == 6) {
        r.add(tame_chain_claim(s, in.table));
        r.add(groups::lemma33_verify());
        r.add(with_fixtures(in, "lemma34", "\"generated by the global units\"", lemma34_verify));
        r.add(groups::lemma35_verify_all());
        r.add(groups::order125_survey());
        r.add(wild_exponent_claim());
        r.add(with_fixtures(in, "display-5-in-E", "\"5 = pi_1 ... pi_5\"", [](const FixtureSet& fs) {
            return prime_display_check("display-5-in-E", "\"5 = pi_1 ... pi_5\"", fs.get("Q(zeta5,24^(1/5))"), 5, 4, 4);
        }));
    } else {
        r.add(thm41_text_claim());
        r.add(with_fixtures(in, "display-3-in-F", "\"3 = pi_1 pi_2 pi_3\"", [](const FixtureSet& fs) {
            return prime_display_check("display-3-in-F", "\"3 = pi_1 pi_2 pi_3\"", fs.get("Q(sqrt-3,10^(1/3))"), 3, 2, 2);
        }));
        r.add(tame_chain_claim(s, in.table));
        r.add(with_fixtures(in, "lemma44", "\"Since these elements generate\"", lemma44_verify));
        r.add(groups::order12_check().verdict);
        r.add(lemma45_claim(in.table));
        r.add(groups::order27_facts());
        r.add(groups::sublemma2_verify(3));
    }
    r.add(kummer_candidates_check());
    for (auto& row : printed_table())
        if (row.ell == s.ell)
            r.add(table_row_claim(in, row));

    std::map<std::string, Status> done;
    for (auto& c : r.claims)
        done[c.id] = c.status;
    r.add(degree_classification_claim(s, done));

    r.add(lemma24_exhaustive_claim());
    r.add(weil_claim(s.ell, cfg.N == 6 ? 7 : 3));
    r.add(scenario_claim(cfg.N, galmod::Branch::Toric, 1));
    r.add(scenario_claim(cfg.N, galmod::Branch::Mixed, cfg.N == 6 ? 2 : 1));
    return r;
}

// ---------------------------------------------------------------- single checks

struct CheckOptions {
    std::string fixtures_path;
    std::string odlyzko_path;
    unsigned long l = 5;
    unsigned long q = 7;
    int d = 1;
    int n = 6;
    std::string branch = "toric";
    std::string field;
    unsigned long p = 0;
    std::string m;
    std::string group;
};

struct CheckEntry {
    std::string description;
    std::function<std::vector<Verdict>(const CheckOptions&, const LoadedInputs&)> run;
};

inline const std::map<std::string, CheckEntry>& check_registry()
{
    static const std::map<std::string, CheckEntry> reg = [] {
        std::map<std::string, CheckEntry> m;
        auto one = [](Verdict v) { return std::vector<Verdict>{std::move(v)}; };
        m["sublemma2"] = {"a = 0 is forced in GL_2(F_3[a]/a^3)", [one](auto&, auto&) { return one(groups::sublemma2_verify(3)); }};
        m["lemma33"] = {"|Aut(G)| coprime to 5 for |G| < 10", [one](auto&, auto&) { return one(groups::lemma33_verify()); }};
        m["lemma35"] = {"extensions of C5 by groups of order 10, 15, 20 (--group LABEL for one)",
                        [one](const CheckOptions& o, auto&) {
                            if (o.group.empty())
                                return one(groups::lemma35_verify_all());
                            for (int n : {10, 15, 20})
                                for (auto& g : groups::catalog(n))
                                    if (g.label() == o.group)
                                        return one(groups::lemma35_verify(g));
                            throw ConfigError("no group of order 10, 15 or 20 labelled " + o.group);
                        }};
        m["order125"] = {"groups of order 125 onto C5 x C5", [one](auto&, auto&) { return one(groups::order125_survey()); }};
        m["order27"] = {"non-abelian groups of order 27", [one](auto&, auto&) { return one(groups::order27_facts()); }};
        m["order12"] = {"groups of order 12 with abelianization C3", [one](auto&, auto&) { return one(groups::order12_check().verdict); }};
        m["lemma45"] = {"discriminant window 3^66..3^69 and the e in {3,6,12} cases",
                        [one](auto&, const LoadedInputs& in) { return one(lemma45_claim(in.table)); }};
        m["lemma32"] = {"tame chain for N = 6", [one](auto&, const LoadedInputs& in) { return one(tame_chain_claim(ProofSetup::for_n(6), in.table)); }};
        m["lemma43"] = {"tame chain for N = 10", [one](auto&, const LoadedInputs& in) { return one(tame_chain_claim(ProofSetup::for_n(10), in.table)); }};
        m["lemma37"] = {"wild exponent v = 8 and conductor pi^2", [one](auto&, auto&) { return one(wild_exponent_claim()); }};
        m["fontaine"] = {"Fontaine cap against the printed decimal (--n 6|10)",
                         [one](const CheckOptions& o, auto&) { return one(fontaine_claim(ProofSetup::for_n(o.n))); }};
        m["degree-bound"] = {"Odlyzko degree bound (--n 6|10)",
                             [one](const CheckOptions& o, const LoadedInputs& in) { return one(degree_bound_claim(ProofSetup::for_n(o.n), in.table, true)); }};
        m["root-disc"] = {"root discriminant of K (--n 6|10)", [one](const CheckOptions& o, auto&) { return one(root_disc_claim(ProofSetup::for_n(o.n))); }};
        m["weil"] = {"ell^{4g} against (1 + sqrt q)^{4g} (--l, --q)", [one](const CheckOptions& o, auto&) { return one(weil_claim(o.l, o.q)); }};
        m["lemma24"] = {"generation vs invertibility of N_d, d <= --d (exhaustive over F_5)",
                        [one](const CheckOptions& o, auto&) { return one(lemma24_exhaustive_claim(std::max(1, o.d))); }};
        m["scenario"] = {"isogeny chase (--n 6|10, --branch toric|mixed, --d)", [one](const CheckOptions& o, auto&) {
                             if (o.n != 6 && o.n != 10)
                                 throw ConfigError("scenario needs --n 6 or --n 10");
                             if (o.branch != "toric" && o.branch != "mixed")
                                 throw ConfigError("--branch must be toric or mixed");
                             return one(scenario_claim(o.n, o.branch == "toric" ? galmod::Branch::Toric : galmod::Branch::Mixed, o.d));
                         }};
        m["kummer"] = {"unramified criterion (--m M --l L, or the candidate sets)", [one](const CheckOptions& o, auto&) {
                           if (o.m.empty())
                               return one(kummer_candidates_check());
                           Verdict v;
                           v.id = "kummer-" + o.m + "-" + std::to_string(o.l);
                           v.citation = "m^{ell-1} = 1 mod ell^2";
                           BigInt mm(o.m);
                           bool u = unramified_criterion(mm, o.l);
                           v.quantities = {{"m", o.m}, {"ell", o.l}, {"unramified", u}};
                           v.status = Status::Pass;
                           v.summary = std::string("Q(zeta_ell, m^{1/ell}) is ") + (u ? "unramified" : "ramified") + " above ell";
                           return one(v);
                       }};
        m["table"] = {"replicate the ray class field table", [](auto&, const LoadedInputs& in) {
                          std::vector<Verdict> out;
                          for (auto& row : printed_table())
                              out.push_back(table_row_claim(in, row));
                          return out;
                      }};
        m["lemma34"] = {"golden ratio -> -2 mod pi; units fill F_5^*", [one](auto&, const LoadedInputs& in) {
                            return one(with_fixtures(in, "lemma34", "\"generated by the global units\"", lemma34_verify));
                        }};
        m["lemma44"] = {"{-1, eps1, eps2} fill (F_3^*)^3", [one](auto&, const LoadedInputs& in) {
                            return one(with_fixtures(in, "lemma44", "\"Since these elements generate\"", lemma44_verify));
                        }};
        m["cft"] = {"full class field theory suite", [](auto&, const LoadedInputs& in) {
                        if (!in.fixtures)
                            return std::vector<Verdict>{Verdict{"cft", "fixtures", Status::FixtureConditional, Json::object(), in.fixtures_error}};
                        return cft_suite(*in.fixtures);
                    }};
        m["fixtures"] = {"validate every fixture", [](auto&, const LoadedInputs& in) {
                             std::vector<std::string> labels;
                             if (in.fixtures)
                                 for (auto& f : in.fixtures->fields)
                                     labels.push_back(f.label);
                             return fixture_claims(in, labels);
                         }};
        m["splitting"] = {"splitting of --p in --field", [one](const CheckOptions& o, const LoadedInputs& in) {
                              if (o.field.empty() || o.p == 0)
                                  throw ConfigError("splitting needs --field LABEL and --p P");
                              return one(with_fixtures(in, "splitting-" + o.field + "-p" + std::to_string(o.p), "\"splits completely in F\"",
                                                       [&](const FixtureSet& fs) { return splitting_check(fs.get(o.field), o.p); }));
                          }};
        m["thm41-text"] = {"statement erratum in the N = 10 theorem", [one](auto&, auto&) { return one(thm41_text_claim()); }};
        return m;
    }();
    return reg;
}

inline AuditReport run_check(const std::string& id, const CheckOptions& o)
{
    auto& reg = check_registry();
    auto it = reg.find(id);
    if (it == reg.end()) {
        std::string ids;
        for (auto& [k, e] : reg)
            ids += (ids.empty() ? "" : ", ") + k;
        throw ConfigError("unknown check '" + id + "'; available: " + ids);
    }
    AuditConfig cfg;
    cfg.fixtures_path = o.fixtures_path;
    cfg.odlyzko_path = o.odlyzko_path;
    LoadedInputs in = load_inputs(cfg);
    AuditReport r;
    r.command = "check " + id;
    r.config = config_json(cfg, in);
    r.config.erase("N");
    r.config["check"] = id;
    r.config["options"] = {{"l", o.l}, {"q", o.q}, {"d", o.d}, {"n", o.n}, {"branch", o.branch},
                           {"field", o.field}, {"p", o.p}, {"m", o.m}, {"group", o.group}};
    r.digest = config_digest(r.config);
    for (auto& v : it->second.run(o, in))
        r.add(std::move(v));
    return r;
}

} // namespace semiaudit

#endif
