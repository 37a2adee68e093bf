#ifndef HYPMAASS_SERIES_HPP
#define HYPMAASS_SERIES_HPP

#include "hypmaass/qforms.hpp"
#include "hypmaass/qseries.hpp"

#include <cstddef>
#include <cstdint>

namespace hypmaass
{

/// Weight parameter k (even, > 2), discriminant D and absolute target accuracy.
struct SeriesParams
{
    SeriesParams(int k, std::int64_t D, double tol = 1e-10);

    int k;
    std::int64_t D;
    double tol;
};

// Throws std::invalid_argument unless k is even and k > 2.
void require_weight_parameter(int k);

struct TruncatedValue
{
    cplx value;
    double tail_bound = 0.0;
    double radius_used = 0.0;
    std::size_t terms = 0;
    bool converged = false;
};

// Limits for the adaptive radius doubling.
struct SumBudget
{
    int max_doublings = 24;
    std::size_t max_forms = 20'000'000;
};

/// f_{k,D}, omega_{k+1,D} and the holomorphic part of omega from one enumeration.
///
/// The radius is doubled until the tail estimate of every sum is below tol and the last
/// doubling moved every sum by less than tol/10. The tail of f beyond R is modelled as
/// C R^{2-k} with C calibrated on the last shell (R/2, R]; omega and the holomorphic part
/// inherit it through |Q_z| <= |Q|/y and |Q'| <= 2|Q|/y. Sums run over the canonical
/// form order with compensated accumulation.
struct HyperbolicSums
{
    TruncatedValue f;
    TruncatedValue omega;
    TruncatedValue holomorphic;
};

HyperbolicSums hyperbolic_sums(const SeriesParams & p, const UpperHalfPoint & z, const SumBudget & budget = {});

// sum 1 / Q(z,1)^k
TruncatedValue f_hyperbolic(const SeriesParams & p, const UpperHalfPoint & z);
// sum Q_z / Q(z,1)^{k+1}
TruncatedValue omega(const SeriesParams & p, const UpperHalfPoint & z);
// -i sum Q'(z,1) / Q(z,1)^{k+1}
TruncatedValue holomorphic_part(const SeriesParams & p, const UpperHalfPoint & z);

// Single terms of the three sums, for per-form identities.
cplx f_term(const QForm & Q, int k, const UpperHalfPoint & z);
cplx omega_term(const QForm & Q, int k, const UpperHalfPoint & z);
cplx holomorphic_term(const QForm & Q, int k, const UpperHalfPoint & z);

// E_2(z) from the q-expansion. `precision` coefficients; tol bounds the truncation tail.
cplx e2(const UpperHalfPoint & z, int precision = kDefaultQPrecision, double tol = 1e-12);
// E_2(z) - 3/(pi y).
cplx e2_star(const UpperHalfPoint & z, int precision = kDefaultQPrecision, double tol = 1e-12);

/// H_z(tau) = sum_{n <= N} j_n(z) e^{2 pi i n tau}. Needs Im(tau) above the height of the
/// reduced representative of z, where the series converges.
TruncatedValue h_generating(const UpperHalfPoint & z, const UpperHalfPoint & tau, int N);

/// ((1/2 pi i) j'(tau)) / (j(z) - j(tau)); requires Im(tau) > Im(z). PoleError if j(z) = j(tau).
cplx akn_closed_form(const UpperHalfPoint & z, const UpperHalfPoint & tau);

/// (k/6) E_2(z) - (1/2 pi i) f'(z)/f(z) with f' = -k sum Q'/Q^{k+1}.
cplx divisor_form_bko(const SeriesParams & p, const UpperHalfPoint & z);
/// (k/2 pi) omega(z)/f(z) + (k/6) E_2*(z).
cplx divisor_form_thm(const SeriesParams & p, const UpperHalfPoint & z);

/// P_{kappa,m}(z) = sum over Gamma_infty \ SL2(Z) of j(g,z)^{-kappa} e^{2 pi i m gz}, truncated
/// to the coset representatives with |cz + d| <= c_max * y (hence 1 <= c <= c_max).
TruncatedValue poincare_exponential(int kappa, int m, const UpperHalfPoint & z, int c_max);

} // namespace hypmaass

#endif
