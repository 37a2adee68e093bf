#ifndef HYPMAASS_SUITES_HPP
#define HYPMAASS_SUITES_HPP

#include "hypmaass/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypmaass
{

struct VerifyOptions
{
    std::optional<int> k;
    std::optional<std::int64_t> D;
    std::uint64_t seed = 42;
    // Tolerance overrides keyed by check name without the bracketed suffix,
    // e.g. "theorem1.ii_splitting".
    std::map<std::string, double> tolerances;
};

// Throws std::invalid_argument when k or D is out of range.
void validate(const VerifyOptions & opts);

// lemma22, theorem1, theorem2, theorem3, vigneras, akn, all
const std::vector<std::string> & suite_names();

// Throws std::invalid_argument for an unknown suite.
std::vector<VerificationReport> run_suite(const std::string & suite, const VerifyOptions & opts);

// Check groups; the suites are unions of these.
std::vector<VerificationReport> lemma22_checks(const VerifyOptions & opts);
std::vector<VerificationReport> modularity_checks(const VerifyOptions & opts);
std::vector<VerificationReport> eigenvalue_decay_checks(const VerifyOptions & opts);
std::vector<VerificationReport> splitting_checks(const VerifyOptions & opts);
std::vector<VerificationReport> divisor_checks(const VerifyOptions & opts);
std::vector<VerificationReport> dimension_zero_checks(const VerifyOptions & opts);
std::vector<VerificationReport> first_coefficient_checks(const VerifyOptions & opts);
std::vector<VerificationReport> vigneras_checks(const VerifyOptions & opts);
std::vector<VerificationReport> theorem2_checks(const VerifyOptions & opts);
std::vector<VerificationReport> lift_component_checks(const VerifyOptions & opts);
std::vector<VerificationReport> petersson_checks(const VerifyOptions & opts);
std::vector<VerificationReport> akn_checks(const VerifyOptions & opts);

} // namespace hypmaass

#endif
