// Runs the twelve acceptance criteria and prints one PASS/FAIL line for each.
// A criterion passes when every report of its check group passed, each required check is
// present with a tolerance no looser than the criterion allows, and the group finished
// within its time budget.

#include "hypmaass/report.hpp"
#include "hypmaass/suites.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace hypmaass;

namespace
{

struct Required
{
    std::string prefix;
    double max_tol;
};

struct Criterion
{
    int id;
    std::string title;
    std::function<std::vector<VerificationReport>(const VerifyOptions &)> group;
    std::vector<Required> required;
    double budget_s;
};

struct Outcome
{
    bool passed = true;
    std::string detail;
};

Outcome judge(const Criterion & c, const std::vector<VerificationReport> & reports, double seconds)
{
    Outcome o;
    std::ostringstream why;
    for (const auto & r : reports) {
        if (!r.passed) {
            o.passed = false;
            why << " failed:" << r.check_name << "(residual " << r.residual << ")";
        }
    }
    for (const auto & req : c.required) {
        int found = 0;
        for (const auto & r : reports) {
            if (r.check_name.rfind(req.prefix, 0) == 0) {
                ++found;
                if (r.tolerance > req.max_tol) {
                    o.passed = false;
                    why << " loose:" << r.check_name;
                }
            }
        }
        if (found == 0) {
            o.passed = false;
            why << " missing:" << req.prefix;
        }
    }
    if (seconds > c.budget_s) {
        o.passed = false;
        why << " slow:" << seconds << "s>" << c.budget_s << "s";
    }
    o.detail = why.str();
    return o;
}

struct Run
{
    int status = -1;
    std::string out;
};

Run run_cli(const std::string & args)
{
    const std::string cmd = std::string(HYPMAASS_CLI) + " " + args;
    Run r;
    FILE * pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 8192> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

void print(int id, bool passed, const std::string & title, double seconds, const std::string & detail)
{
    std::printf("criterion %2d %s  %-58s %8.2fs%s\n", id, passed ? "PASS" : "FAIL", title.c_str(), seconds,
                detail.c_str());
    std::fflush(stdout);
}

} // namespace

int main()
{
    const VerifyOptions opts; // seed 42, defaults per check

    const std::vector<Criterion> criteria{
        {1, "quadratic form identities, 100 random (Q, z)", lemma22_checks,
         {{"lemma22.i_", 1e-12}, {"lemma22.ii_", 1e-6}, {"lemma22.iii_", 1e-6}, {"lemma22.iv_", 1e-12}}, 1.0},
        {2, "modularity of f and omega under S, T, TS", modularity_checks,
         {{"theorem1.i_modularity_f", 1e-6}, {"theorem1.i_modularity_omega", 1e-6}}, 30.0},
        {3, "Laplace eigenvalue and decay of omega", eigenvalue_decay_checks,
         {{"theorem1.i_eigenvalue", 1e-4}, {"theorem1.i_decay_far", 0.0}}, 60.0},
        {4, "splitting of omega", splitting_checks, {{"theorem1.ii_splitting", 1e-9}}, 60.0},
        {5, "divisor forms", divisor_checks,
         {{"theorem1.iii_divisor_agreement", 1e-5}, {"theorem1.iii_empty_divisor", 1e-5},
          {"theorem1.iii_rho_divisor", 1e-4}},
         120.0},
        {6, "dimension-zero vanishing for k = 4", dimension_zero_checks, {{"theorem1.dimension_zero", 1e-6}}, 60.0},
        {7, "Vigneras equation and homogeneity", vigneras_checks,
         {{"vigneras.sample_", 1e-10}, {"vigneras.homogeneity", 1e-12}}, 5.0},
        {8, "weight k+1/2 modularity of Lambda_k, plus space", theorem2_checks,
         {{"theorem2.gamma0_4_modularity", 1e-5}, {"theorem2.t_invariance", 1e-10}, {"theorem2.plus_space", 1e-9}},
         600.0},
        {9, "theta lift components", lift_component_checks,
         {{"theorem3.a_coefficient_extraction", 1e-7}, {"theorem3.b_mellin", 1e-10},
          {"theorem3.c_conjugation_symmetry", 1e-9}, {"theorem3.d_rhs_constant", 1e-10}},
         120.0},
        {10, "Petersson products against Poincare series", petersson_checks,
         {{"theorem3.petersson_coefficient", 1e-3}}, 120.0},
        {11, "generating function of j_n, exact j_2", akn_checks,
         {{"akn.generating_vs_closed", 1e-7}, {"akn.faber2_exact", 0.0}}, 60.0},
    };

    int failures = 0;
    for (const auto & c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<VerificationReport> reports;
        std::string error;
        try {
            reports = c.group(opts);
        } catch (const std::exception & e) {
            error = std::string(" exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        Outcome o = error.empty() ? judge(c, reports, s) : Outcome{false, error};
        failures += !o.passed;
        print(c.id, o.passed, c.title, s, o.detail);
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        const Run a = run_cli("verify --suite all --seed 42 --json - --quiet");
        const Run b = run_cli("verify --suite all --seed 42 --json - --quiet");
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool same = !a.out.empty() && a.out == b.out;
        const bool ok = same && a.status == 0 && b.status == 0;
        std::string detail;
        if (!same) {
            detail += " outputs differ";
        }
        if (a.status != 0 || b.status != 0) {
            detail += " exit " + std::to_string(a.status) + "/" + std::to_string(b.status);
        }
        failures += !ok;
        print(12, ok, "verify --suite all --seed 42 twice: identical, exit 0", s, detail);
    }

    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
