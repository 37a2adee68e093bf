#ifndef HYPMAASS_REPORT_HPP
#define HYPMAASS_REPORT_HPP

#include "json.hpp"

#include <string>
#include <vector>

namespace hypmaass
{

/// Outcome of one named identity check. passed is residual <= tolerance (false for NaN).
struct VerificationReport
{
    std::string check_name;
    nlohmann::json params = nlohmann::json::object();
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string notes;
};

VerificationReport make_report(std::string name, nlohmann::json params, double residual, double tolerance,
                               std::string notes = {});

nlohmann::json to_json(const VerificationReport & r);

// {"schema": 1, "reports": [...]} with reports ordered by check name.
nlohmann::json reports_to_json(std::vector<VerificationReport> reports);

bool all_passed(const std::vector<VerificationReport> & reports);

} // namespace hypmaass

#endif
