// Command-line front end: verification suites, value tables, Fourier coefficients and form listings.

#include "hypmaass/errors.hpp"
#include "hypmaass/lift.hpp"
#include "hypmaass/qforms.hpp"
#include "hypmaass/qseries.hpp"
#include "hypmaass/report.hpp"
#include "hypmaass/series.hpp"
#include "hypmaass/suites.hpp"
#include "hypmaass/theta.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace hypmaass;
using nlohmann::json;

namespace
{

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Thrown for bad flag values; maps to the usage exit code.
struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

// "i", "2i", "0.1+1.2i", "-0.3-0.5i", "0.1,1.2"
UpperHalfPoint parse_point(const std::string & text)
{
    std::string s;
    for (char c : text) {
        if (c != ' ') {
            s += c;
        }
    }
    const auto comma = s.find(',');
    try {
        if (comma != std::string::npos) {
            return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
        }
        static const std::regex re(R"(^([+-]?[0-9.eE]+(?=[+-]))?([+-]?[0-9.eE]*)i$)");
        std::smatch m;
        if (std::regex_match(s, m, re)) {
            const double x = m[1].matched ? std::stod(m[1].str()) : 0.0;
            std::string im = m[2].str();
            if (im.empty() || im == "+") {
                im = "1";
            } else if (im == "-") {
                im = "-1";
            }
            return {x, std::stod(im)};
        }
    } catch (const std::invalid_argument &) {
        // falls through to the usage error below; UpperHalfPoint errors propagate as-is
    }
    throw UsageError("cannot parse point '" + text + "' (use x,y or x+yi with y > 0)");
}

struct Range
{
    double lo;
    double hi;
    int count;
};

// "a:b:n" (n points, endpoints included) or a single value.
Range parse_range(const std::string & text)
{
    const auto c1 = text.find(':');
    try {
        if (c1 == std::string::npos) {
            const double v = std::stod(text);
            return {v, v, 1};
        }
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos) {
            throw UsageError("range '" + text + "' must be a:b:n");
        }
        Range r{std::stod(text.substr(0, c1)), std::stod(text.substr(c1 + 1, c2 - c1 - 1)),
                std::stoi(text.substr(c2 + 1))};
        if (r.count < 1) {
            throw UsageError("range '" + text + "' needs n >= 1");
        }
        return r;
    } catch (const std::logic_error & e) {
        if (dynamic_cast<const UsageError *>(&e)) {
            throw;
        }
        throw UsageError("cannot parse range '" + text + "'");
    }
}

double range_value(const Range & r, int i)
{
    return r.count == 1 ? r.lo : r.lo + (r.hi - r.lo) * i / (r.count - 1);
}

// "1..5" or "3"
std::pair<int, int> parse_index_range(const std::string & text)
{
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        const int a = std::stoi(text.substr(0, dots));
        const int b = std::stoi(text.substr(dots + 2));
        if (b < a) {
            throw UsageError("index range '" + text + "' is empty");
        }
        return {a, b};
    } catch (const UsageError &) {
        throw;
    } catch (const std::logic_error &) {
        throw UsageError("cannot parse index range '" + text + "' (use a..b)");
    }
}

std::string fmt(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

// Rows of named numeric or string cells, written as CSV or a JSON array of objects.
struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;

    void write(std::ostream & os, const std::string & format) const
    {
        if (format == "json") {
            json arr = json::array();
            for (const auto & row : rows) {
                json obj;
                for (std::size_t i = 0; i < columns.size(); ++i) {
                    obj[columns[i]] = row[i];
                }
                arr.push_back(obj);
            }
            json out;
            out["schema"] = 1;
            out["rows"] = arr;
            os << out.dump(2) << "\n";
            return;
        }
        for (std::size_t i = 0; i < columns.size(); ++i) {
            os << (i ? "," : "") << columns[i];
        }
        os << "\n";
        for (const auto & row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "");
                if (row[i].is_number_float()) {
                    os << fmt(row[i].get<double>());
                } else if (row[i].is_string()) {
                    os << row[i].get<std::string>();
                } else {
                    os << row[i].dump();
                }
            }
            os << "\n";
        }
    }
};

void emit(const Table & t, const std::string & format, const std::string & out_path)
{
    if (out_path.empty() || out_path == "-") {
        t.write(std::cout, format);
        return;
    }
    std::ofstream f(out_path);
    if (!f) {
        throw UsageError("cannot open '" + out_path + "' for writing");
    }
    t.write(f, format);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Hyperbolic Poincare series, weak Maass forms and theta kernels: evaluation and verification"};
    app.require_subcommand(1);

    // verify
    auto * verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every check passes");
    std::string suite = "all";
    int vk = 0;
    std::int64_t vD = 0;
    std::uint64_t seed = 42;
    std::string json_path;
    std::vector<std::string> tol_overrides;
    bool quiet = false;
    verify->add_option("--suite", suite, "lemma22, theorem1, theorem2, theorem3, vigneras, akn or all")
        ->capture_default_str();
    verify->add_option("--k", vk, "weight parameter (even, > 2); default per check");
    verify->add_option("--D", vD, "discriminant; default per check");
    verify->add_option("--seed", seed, "seed for all random sampling")->capture_default_str();
    verify->add_option("--json", json_path, "write the JSON report document here ('-' for stdout)");
    verify->add_option("--tolerance", tol_overrides, "override a tolerance: check_name=value (repeatable)");
    verify->add_flag("--quiet", quiet, "no per-check summary lines");

    // eval
    auto * eval = app.add_subcommand(
        "eval", "Tabulate f, omega, holomorphic part or Lambda on a grid.\n"
                "CSV columns: x,y,re,im,tail_bound (f, omega, holomorphic: grid in z)\n"
                "             u,v,re,im,tail_bound (lambda: grid in tau, z fixed)");
    std::string function = "f";
    int ek = 6;
    std::int64_t eD = 5;
    double etol = 1e-10;
    std::string xs = "0", ys = "1", zfixed = "0.1+1.2i";
    int dmax = 40;
    std::string format = "csv", out_path;
    eval->add_option("--function", function, "f, omega, holomorphic or lambda")->capture_default_str();
    eval->add_option("--k", ek, "weight parameter")->capture_default_str();
    eval->add_option("--D", eD, "discriminant (ignored for lambda)")->capture_default_str();
    eval->add_option("--tol", etol, "truncation tolerance")->capture_default_str();
    eval->add_option("--x", xs, "real parts a:b:n or a value")->capture_default_str();
    eval->add_option("--y", ys, "imaginary parts a:b:n or a value")->capture_default_str();
    eval->add_option("--z", zfixed, "fixed z for lambda")->capture_default_str();
    eval->add_option("--dmax", dmax, "largest discriminant in lambda")->capture_default_str();
    eval->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    eval->add_option("--out", out_path, "output file (default stdout)");

    // fourier
    auto * fourier = app.add_subcommand("fourier", "Fourier coefficients at a fixed height.\n"
                                                   "CSV columns: n,re,im,ratio_re,ratio_im (ratio against the first n)");
    std::string ffunction = "f";
    int fk = 6;
    std::int64_t fD = 5;
    std::string nrange = "1..5";
    double fy = 1.0;
    int nodes = 256;
    double ftol = 1e-12;
    fourier->add_option("--function", ffunction, "f, omega or delta")->capture_default_str();
    fourier->add_option("--k", fk, "weight parameter")->capture_default_str();
    fourier->add_option("--D", fD, "discriminant")->capture_default_str();
    fourier->add_option("--n", nrange, "indices a..b")->capture_default_str();
    fourier->add_option("--y", fy, "height")->capture_default_str();
    fourier->add_option("--nodes", nodes, "trapezoid nodes")->capture_default_str();
    fourier->add_option("--tol", ftol, "truncation tolerance of the sums")->capture_default_str();
    fourier->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    fourier->add_option("--out", out_path, "output file (default stdout)");

    // qforms
    auto * qforms = app.add_subcommand("qforms", "List forms of discriminant D with |Q(z,1)| <= radius.\n"
                                                 "CSV columns: a,b,c,re_Q,im_Q,abs_Q,Q_z");
    std::int64_t qD = 5;
    std::string qz = "i";
    double radius = 3.0;
    qforms->add_option("--D", qD, "discriminant")->capture_default_str();
    qforms->add_option("--z", qz, "point, x,y or x+yi")->capture_default_str();
    qforms->add_option("--radius", radius, "bound on |Q(z,1)|")->capture_default_str();
    qforms->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    qforms->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*verify) {
            const auto & names = suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                throw UsageError("unknown suite '" + suite + "'");
            }
            VerifyOptions opts;
            opts.seed = seed;
            if (verify->count("--k")) {
                opts.k = vk;
            }
            if (verify->count("--D")) {
                opts.D = vD;
            }
            for (const auto & t : tol_overrides) {
                const auto eq = t.find('=');
                if (eq == std::string::npos) {
                    throw UsageError("--tolerance expects name=value, got '" + t + "'");
                }
                try {
                    opts.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
                } catch (const std::logic_error &) {
                    throw UsageError("--tolerance value in '" + t + "' is not a number");
                }
            }
            try {
                validate(opts);
            } catch (const std::invalid_argument & e) {
                throw UsageError(e.what());
            }
            const auto reports = run_suite(suite, opts);
            const std::string text = reports_to_json(reports).dump(2) + "\n";
            if (json_path == "-") {
                std::cout << text;
            } else if (!json_path.empty()) {
                std::ofstream f(json_path);
                if (!f) {
                    throw UsageError("cannot open '" + json_path + "' for writing");
                }
                f << text;
            }
            if (!quiet && json_path != "-") {
                for (const auto & r : reports) {
                    std::printf("%s %s residual=%.3e tol=%.1e\n", r.passed ? "PASS" : "FAIL", r.check_name.c_str(),
                                r.residual, r.tolerance);
                }
            }
            return all_passed(reports) ? kExitPass : kExitFail;
        }

        if (*eval) {
            Table t;
            if (function == "lambda") {
                const ThetaKernel kernel(KernelKind::lambda, ek, parse_point(zfixed), dmax, etol);
                t.columns = {"u", "v", "re", "im", "tail_bound"};
                const Range ur = parse_range(xs), vr = parse_range(ys);
                for (int i = 0; i < ur.count; ++i) {
                    for (int j = 0; j < vr.count; ++j) {
                        const UpperHalfPoint tau(range_value(ur, i), range_value(vr, j));
                        const cplx v = kernel(tau);
                        t.rows.push_back({tau.x(), tau.y(), v.real(), v.imag(), kernel.tail_bound(tau.y())});
                    }
                }
            } else {
                if (function != "f" && function != "omega" && function != "holomorphic") {
                    throw UsageError("--function must be f, omega, holomorphic or lambda");
                }
                const SeriesParams p(ek, eD, etol);
                t.columns = {"x", "y", "re", "im", "tail_bound"};
                const Range xr = parse_range(xs), yr = parse_range(ys);
                for (int i = 0; i < xr.count; ++i) {
                    for (int j = 0; j < yr.count; ++j) {
                        const UpperHalfPoint z(range_value(xr, i), range_value(yr, j));
                        const auto s = hyperbolic_sums(p, z);
                        const auto & v = function == "f" ? s.f : function == "omega" ? s.omega : s.holomorphic;
                        if (!v.converged) {
                            throw ConvergenceError("sum did not converge at z = " + fmt(z.x()) + " + " + fmt(z.y()) + "i");
                        }
                        t.rows.push_back({z.x(), z.y(), v.value.real(), v.value.imag(), v.tail_bound});
                    }
                }
            }
            emit(t, format, out_path);
            return kExitPass;
        }

        if (*fourier) {
            SmoothFunction F;
            if (ffunction == "delta") {
                F = [](const UpperHalfPoint & z) { return evaluate_q(cached_delta(), z).value; };
            } else if (ffunction == "f" || ffunction == "omega") {
                const SeriesParams p(fk, fD, ftol);
                const bool want_f = ffunction == "f";
                F = [p, want_f](const UpperHalfPoint & z) {
                    const auto s = hyperbolic_sums(p, z);
                    return want_f ? s.f.value : s.omega.value;
                };
            } else {
                throw UsageError("--function must be f, omega or delta");
            }
            const auto [a, b] = parse_index_range(nrange);
            Table t;
            t.columns = {"n", "re", "im", "ratio_re", "ratio_im"};
            cplx first;
            for (int n = a; n <= b; ++n) {
                const cplx c = fourier_coefficient(F, n, fy, nodes);
                if (n == a) {
                    first = c;
                }
                const cplx ratio = c / first;
                t.rows.push_back({n, c.real(), c.imag(), ratio.real(), ratio.imag()});
            }
            emit(t, format, out_path);
            return kExitPass;
        }

        if (*qforms) {
            const UpperHalfPoint z = parse_point(qz);
            Table t;
            t.columns = {"a", "b", "c", "re_Q", "im_Q", "abs_Q", "Q_z"};
            for (const auto & Q : enumerate_bounded(qD, z, radius)) {
                const cplx v = evaluate(Q, z);
                t.rows.push_back({Q.a, Q.b, Q.c, v.real(), v.imag(), std::abs(v), geodesic_invariant(Q, z)});
            }
            emit(t, format, out_path);
            return kExitPass;
        }
    } catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument & e) {
        // DiscriminantError, bad weights and other rejected inputs
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
