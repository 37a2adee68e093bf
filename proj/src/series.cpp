#include "hypmaass/series.hpp"

#include "hypmaass/compensated.hpp"
#include "hypmaass/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace hypmaass
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

cplx ipow(cplx w, int n)
{
    cplx result = 1.0;
    while (n > 0) {
        if (n & 1) {
            result *= w;
        }
        w *= w;
        n >>= 1;
    }
    return result;
}

// e^{2 pi i n w} for real n, with the phase reduced mod 1 before scaling.
cplx expi2pi(double n, const UpperHalfPoint & w)
{
    return std::polar(std::exp(-2.0 * kPi * n * w.y()), 2.0 * kPi * std::fmod(n * w.x(), 1.0));
}

// a with a d = 1 mod c, for gcd(c, d) = 1 and c >= 1.
std::int64_t inverse_mod(std::int64_t d, std::int64_t c)
{
    std::int64_t r0 = c, r1 = ((d % c) + c) % c;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return ((s0 % c) + c) % c;
}

} // namespace

void require_weight_parameter(int k)
{
    if (k <= 2 || k % 2 != 0) {
        throw std::invalid_argument("k = " + std::to_string(k) + " is not allowed: k must be even and k > 2");
    }
}

SeriesParams::SeriesParams(int k_, std::int64_t D_, double tol_) : k(k_), D(D_), tol(tol_)
{
    require_weight_parameter(k);
    require_discriminant(D);
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument("tolerance must be positive and finite");
    }
}

cplx f_term(const QForm & Q, int k, const UpperHalfPoint & z)
{
    return ipow(1.0 / evaluate(Q, z), k);
}

cplx omega_term(const QForm & Q, int k, const UpperHalfPoint & z)
{
    return geodesic_invariant(Q, z) * ipow(1.0 / evaluate(Q, z), k + 1);
}

cplx holomorphic_term(const QForm & Q, int k, const UpperHalfPoint & z)
{
    return -kI * z_derivative(Q, z) * ipow(1.0 / evaluate(Q, z), k + 1);
}

HyperbolicSums hyperbolic_sums(const SeriesParams & p, const UpperHalfPoint & z, const SumBudget & budget)
{
    const double y = z.y();
    const double rho = std::pow(2.0, 2 - p.k);
    const double r_min = std::sqrt(static_cast<double>(p.D)) * y;

    HyperbolicSums out;
    cplx prev_f, prev_omega, prev_hol;
    bool have_prev = false;
    std::size_t nonempty_shells = 0;
    double R = 4.0 * r_min;

    for (int step = 0; step <= budget.max_doublings; ++step, R *= 2.0) {
        const auto forms = enumerate_bounded(p.D, z, R);
        if (forms.size() > budget.max_forms) {
            break;
        }
        ComplexCompensatedSum sf, so, sh;
        double shell_abs = 0.0;
        std::size_t shell_count = 0;
        for (const auto & Q : forms) {
            const cplx q = evaluate(Q, z);
            const cplx inv = 1.0 / q;
            const cplx pk = ipow(inv, p.k);
            const cplx pk1 = pk * inv;
            sf.add(pk);
            so.add(geodesic_invariant(Q, z) * pk1);
            sh.add(-kI * z_derivative(Q, z) * pk1);
            const double mod = std::abs(q);
            if (mod > 0.5 * R) {
                shell_abs += std::pow(mod, -p.k);
                ++shell_count;
            }
        }
        const double tail_f = shell_abs * rho / (1.0 - rho);
        out.f = {sf.value(), tail_f, R, forms.size(), false};
        out.omega = {so.value(), tail_f / y, R, forms.size(), false};
        out.holomorphic = {sh.value(), 2.0 * tail_f / y, R, forms.size(), false};

        nonempty_shells = shell_count > 0 ? nonempty_shells + 1 : 0;
        if (have_prev && nonempty_shells >= 2 && R >= 8.0 * r_min) {
            const double small = p.tol / 10.0;
            const bool tails_ok = out.f.tail_bound <= p.tol && out.omega.tail_bound <= p.tol &&
                                  out.holomorphic.tail_bound <= p.tol;
            const bool steady = std::abs(out.f.value - prev_f) <= small &&
                                std::abs(out.omega.value - prev_omega) <= small &&
                                std::abs(out.holomorphic.value - prev_hol) <= small;
            if (tails_ok && steady) {
                out.f.converged = out.omega.converged = out.holomorphic.converged = true;
                return out;
            }
        }
        prev_f = out.f.value;
        prev_omega = out.omega.value;
        prev_hol = out.holomorphic.value;
        have_prev = true;
    }
    return out;
}

TruncatedValue f_hyperbolic(const SeriesParams & p, const UpperHalfPoint & z)
{
    return hyperbolic_sums(p, z).f;
}

TruncatedValue omega(const SeriesParams & p, const UpperHalfPoint & z)
{
    return hyperbolic_sums(p, z).omega;
}

TruncatedValue holomorphic_part(const SeriesParams & p, const UpperHalfPoint & z)
{
    return hyperbolic_sums(p, z).holomorphic;
}

cplx e2(const UpperHalfPoint & z, int precision, double tol)
{
    if (precision == kDefaultQPrecision) {
        return evaluate_q(cached_e2(), z, tol).value;
    }
    return evaluate_q(eisenstein(2, precision), z, tol).value;
}

cplx e2_star(const UpperHalfPoint & z, int precision, double tol)
{
    return e2(z, precision, tol) - 3.0 / (kPi * z.y());
}

TruncatedValue h_generating(const UpperHalfPoint & z, const UpperHalfPoint & tau, int N)
{
    if (N < 0) {
        throw std::invalid_argument("h_generating: N must be nonnegative");
    }
    const double height = reduce_to_fundamental_domain(z).second.y();
    if (!(tau.y() > z.y()) || !(tau.y() > height)) {
        throw std::invalid_argument("h_generating: need Im(tau) > Im(z) and above the reduced height of z");
    }
    ComplexCompensatedSum sum;
    double scale = 0.0;
    for (int n = 0; n <= N; ++n) {
        const cplx jn = evaluate_faber(n, z);
        sum.add(jn * expi2pi(n, tau));
        if (n >= 1) {
            scale = std::max(scale, std::abs(jn) * std::exp(-2.0 * kPi * n * height));
        }
    }
    const double r = std::exp(-2.0 * kPi * (tau.y() - height));
    TruncatedValue out;
    out.value = sum.value();
    out.tail_bound = (N == 0 ? 1.0 : scale) * std::pow(r, N + 1) / (1.0 - r);
    out.radius_used = N;
    out.terms = static_cast<std::size_t>(N) + 1;
    out.converged = true;
    return out;
}

cplx akn_closed_form(const UpperHalfPoint & z, const UpperHalfPoint & tau)
{
    if (!(tau.y() > z.y())) {
        throw std::invalid_argument("akn_closed_form: need Im(tau) > Im(z)");
    }
    const cplx jz = evaluate_j(z);
    const auto [g, reduced] = reduce_to_fundamental_domain(tau);
    const cplx jt = evaluate_q(cached_j(), reduced).value;
    // q dj/dq has weight 2.
    const cplx jg = cocycle(g, tau);
    const cplx dj = evaluate_q(cached_j_derivative(), reduced).value / (jg * jg);
    const cplx den = jz - jt;
    if (std::abs(den) <= 1e-10 * (1.0 + std::abs(jz) + std::abs(jt))) {
        throw PoleError("akn_closed_form: j(z) = j(tau), the points are SL2(Z)-equivalent");
    }
    return dj / den;
}

namespace
{

HyperbolicSums well_conditioned_sums(const SeriesParams & p, const UpperHalfPoint & z)
{
    auto s = hyperbolic_sums(p, z);
    if (!s.f.converged) {
        throw ConvergenceError("hyperbolic sums did not converge to tol " + std::to_string(p.tol));
    }
    if (std::abs(s.f.value) <= 1e3 * p.tol) {
        throw IllConditionedError("f_{k,D}(z) is too close to zero for a quotient by it");
    }
    return s;
}

} // namespace

cplx divisor_form_bko(const SeriesParams & p, const UpperHalfPoint & z)
{
    const auto s = well_conditioned_sums(p, z);
    const double k = p.k;
    // f' = -ik * holomorphic part, so -(1/2 pi i) f'/f = k hol / (2 pi f).
    return (k / 6.0) * e2(z) + k * s.holomorphic.value / (2.0 * kPi * s.f.value);
}

cplx divisor_form_thm(const SeriesParams & p, const UpperHalfPoint & z)
{
    const auto s = well_conditioned_sums(p, z);
    const double k = p.k;
    return (k / (2.0 * kPi)) * s.omega.value / s.f.value + (k / 6.0) * e2_star(z);
}

TruncatedValue poincare_exponential(int kappa, int m, const UpperHalfPoint & z, int c_max)
{
    if (kappa < 4 || kappa % 2 != 0) {
        throw std::invalid_argument("poincare_exponential: weight must be even and at least 4");
    }
    if (m < 1) {
        throw std::invalid_argument("poincare_exponential: m must be positive");
    }
    if (c_max < 1) {
        throw std::invalid_argument("poincare_exponential: c_max must be positive");
    }
    const double x = z.x();
    const double y = z.y();
    const double L = c_max * y;
    const double rho = std::pow(2.0, 2 - kappa);

    ComplexCompensatedSum sum;
    sum.add(expi2pi(m, z));
    double shell_abs = 0.0;
    std::size_t terms = 1;
    for (std::int64_t c = 1; c <= c_max; ++c) {
        const double cd = static_cast<double>(c);
        const double w2 = L * L - cd * cd * y * y;
        if (w2 < 0.0) {
            break;
        }
        const double w = std::sqrt(w2);
        const auto dlo = static_cast<std::int64_t>(std::ceil(-cd * x - w));
        const auto dhi = static_cast<std::int64_t>(std::floor(-cd * x + w));
        for (std::int64_t d = dlo; d <= dhi; ++d) {
            if (std::gcd(c, d) != 1) {
                continue;
            }
            const cplx j{cd * x + static_cast<double>(d), cd * y};
            const double absj = std::abs(j);
            if (absj > L) {
                continue;
            }
            const auto a = static_cast<double>(inverse_mod(d, c));
            // gz = a/c - 1/(c (cz + d))
            const cplx gz = a / cd - 1.0 / (cd * j);
            const cplx term = ipow(1.0 / j, kappa) * expi2pi(m, UpperHalfPoint(gz.real(), y / (absj * absj)));
            sum.add(term);
            ++terms;
            if (absj > 0.5 * L) {
                shell_abs += std::abs(term);
            }
        }
    }
    TruncatedValue out;
    out.value = sum.value();
    out.tail_bound = shell_abs * rho / (1.0 - rho);
    out.radius_used = L;
    out.terms = terms;
    out.converged = true;
    return out;
}

} // namespace hypmaass
