#ifndef SEMIAUDIT_VERDICT_HPP
#define SEMIAUDIT_VERDICT_HPP

#include "json.hpp"

#include <string>
#include <utility>

namespace semiaudit {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, FixtureConditional, Assumed, ErratumNoted, Inconclusive };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::FixtureConditional: return "FIXTURE-CONDITIONAL";
    case Status::Assumed: return "ASSUMED";
    case Status::ErratumNoted: return "ERRATUM-NOTED";
    default: return "INCONCLUSIVE";
    }
}

// one audited claim; quantities hold the exact integers/rationals that were compared
struct Verdict {
    std::string id;
    std::string citation;
    Status status = Status::Pass;
    Json quantities = Json::object();
    std::string summary;

    bool passed() const { return status == Status::Pass; }
    bool failed() const { return status == Status::Fail; }

    Json to_json() const
    {
        Json j;
        j["id"] = id;
        j["citation"] = citation;
        j["status"] = to_string(status);
        j["quantities"] = quantities;
        j["summary"] = summary;
        return j;
    }
};

inline Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

// worst-of combination used when a claim aggregates sub-checks
inline Status combine(Status a, Status b)
{
    auto rank = [](Status s) {
        switch (s) {
        case Status::Fail: return 5;
        case Status::Inconclusive: return 4;
        case Status::FixtureConditional: return 3;
        case Status::Assumed: return 2;
        case Status::ErratumNoted: return 1;
        default: return 0;
        }
    };
    return rank(a) >= rank(b) ? a : b;
}

} // namespace semiaudit

#endif
