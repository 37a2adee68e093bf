#include "hypmaass/report.hpp"

#include <algorithm>
#include <cmath>

namespace hypmaass
{

VerificationReport make_report(std::string name, nlohmann::json params, double residual, double tolerance,
                               std::string notes)
{
    VerificationReport r;
    r.check_name = std::move(name);
    r.params = std::move(params);
    r.residual = residual;
    r.tolerance = tolerance;
    r.passed = residual <= tolerance;
    r.notes = std::move(notes);
    return r;
}

nlohmann::json to_json(const VerificationReport & r)
{
    nlohmann::json j;
    j["check_name"] = r.check_name;
    j["params"] = r.params;
    // JSON has no NaN or infinity; encode them as strings.
    if (std::isfinite(r.residual)) {
        j["residual"] = r.residual;
    } else {
        j["residual"] = std::isnan(r.residual) ? "nan" : "inf";
    }
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    j["notes"] = r.notes;
    return j;
}

nlohmann::json reports_to_json(std::vector<VerificationReport> reports)
{
    std::stable_sort(reports.begin(), reports.end(),
                     [](const auto & a, const auto & b) { return a.check_name < b.check_name; });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto & r : reports) {
        arr.push_back(to_json(r));
    }
    nlohmann::json out;
    out["schema"] = 1;
    out["reports"] = std::move(arr);
    return out;
}

bool all_passed(const std::vector<VerificationReport> & reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto & r) { return r.passed; });
}

} // namespace hypmaass
