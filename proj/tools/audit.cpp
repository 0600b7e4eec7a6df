#include "semiaudit/audit/audit.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace semiaudit;

namespace {

int emit(const AuditReport& r, const std::string& json_path, bool quiet)
{
    if (!json_path.empty()) {
        std::string s = r.to_json().dump(2) + "\n";
        if (json_path == "-") {
            std::cout << s;
        } else {
            std::ofstream out(json_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write " << json_path << "\n";
                return 30;
            }
            out << s;
        }
    }
    if (!quiet && json_path != "-")
        std::cout << r.text();
    return r.exit_code();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"semiaudit: replay of the semistable abelian variety non-existence argument for N = 6 and N = 10"};
    app.require_subcommand(1);

    AuditConfig acfg;
    std::string audit_json;
    bool without_grh = false, quiet = false;
    auto* audit = app.add_subcommand("audit", "run the full replay for N = 6 or N = 10");
    audit->add_option("N", acfg.N, "6 or 10")->required()->check(CLI::IsMember({6, 10}));
    audit->add_option("--fixtures", acfg.fixtures_path, "fixture JSON (default: $AUDIT_FIXTURES, then the shipped file)");
    audit->add_option("--odlyzko", acfg.odlyzko_path, "extra Odlyzko rows, one \"degree bound\" per line");
    audit->add_option("--json", audit_json, "write the JSON report to PATH ('-' for stdout)");
    audit->add_flag("--without-grh", without_grh, "do not use the GRH Odlyzko table");
    audit->add_flag("--quiet", quiet, "no human-readable report");

    std::string check_id, check_json;
    CheckOptions co;
    auto* check = app.add_subcommand("check", "run one verifier; 'check list' shows the ids");
    check->add_option("id", check_id, "verifier id")->required();
    check->add_option("--fixtures", co.fixtures_path, "fixture JSON");
    check->add_option("--odlyzko", co.odlyzko_path, "extra Odlyzko rows");
    check->add_option("--json", check_json, "write the JSON report to PATH ('-' for stdout)");
    check->add_option("--l", co.l, "prime ell");
    check->add_option("--q", co.q, "residue field size q");
    check->add_option("--d", co.d, "dimension d");
    check->add_option("--n", co.n, "N (6 or 10)");
    check->add_option("--branch", co.branch, "toric or mixed");
    check->add_option("--field", co.field, "fixture label");
    check->add_option("--p", co.p, "prime p");
    check->add_option("--m", co.m, "Kummer radicand");
    check->add_option("--group", co.group, "catalog label");
    check->add_flag("--quiet", quiet, "no human-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 30;
    }

    try {
        if (*audit) {
            acfg.grh = !without_grh;
            return emit(run_audit(acfg), audit_json, quiet);
        }
        if (check_id == "list") {
            for (auto& [id, e] : check_registry())
                std::cout << id << "  " << e.description << "\n";
            return 0;
        }
        return emit(run_check(check_id, co), check_json, quiet);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 30;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 30;
    }
}
