#ifndef HYPMAASS_LIFT_HPP
#define HYPMAASS_LIFT_HPP

#include "hypmaass/maass_ops.hpp"
#include "hypmaass/report.hpp"

#include <vector>

namespace hypmaass
{

/// n-th coefficient of a 1-periodic holomorphic Fourier expansion, measured at height y:
/// e^{2 pi n y} (1/M) sum_j F(x_j + iy) e^{-2 pi i n x_j} with x_j = j/M.
/// The trapezoid is repeated with 2M nodes; disagreement beyond rounding throws
/// ConvergenceError (aliasing). Returns the 2M-node value.
cplx fourier_coefficient(const SmoothFunction & F, int n, double y, int M = 256);

struct FirstCoefficient
{
    int n = 0;
    cplx value;
};

/// Scans n = 1..nmax and returns the first coefficient with |c(n)| > 1e-8 max(1, |c(1)|).
/// Throws ConvergenceError if none is found.
FirstCoefficient first_nonvanishing_coefficient(const SmoothFunction & F, double y, int nmax = 10, int M = 256);

/**
 * Quadrature over the standard fundamental domain cut off at height Y.
 *
 * The band 1 <= y <= Y uses the periodic trapezoid rule in x with Gauss-Legendre panels in
 * y. The cap between the arc |z| = 1 and the line y = 1 uses Gauss-Legendre in both
 * directions.
 */
struct QuadratureGrid
{
    double Y = 6.0;
    int x_nodes = 48;     // trapezoid nodes on [-1/2, 1/2) in the band
    int y_panels = 10;    // Gauss-Legendre panels on [1, Y]
    int cap_x_panels = 2; // Gauss-Legendre panels on [-1/2, 1/2] in the cap
    int cap_y_panels = 1; // per column, between the arc and y = 1

    // Every node count and panel count doubled (spacing halved).
    QuadratureGrid refined() const;
};

struct PeterssonValue
{
    cplx value;
    double tail_bound = 0.0; // estimate of the part above Y
};

/// Integral of F conj(G) y^kappa dx dy / y^2 over the truncated fundamental domain.
/// Throws ConvergenceError when the integrand does not decay at the cutoff.
PeterssonValue petersson_product(int kappa, const SmoothFunction & F, const SmoothFunction & G,
                                 const QuadratureGrid & grid = {});

struct MellinResult
{
    double numeric = 0.0;
    double closed_form = 0.0;
    double residual = 0.0; // relative
};

/// Integral over (0, inf) of v^{k+1/2} e^{-4 pi D v} dv / v^2, by double exponential quadrature
/// after t = 4 pi D v, against Gamma(k - 1/2) / (4 pi D)^{k-1/2}.
MellinResult mellin_weight_integral(int k, long D, double tol = 1e-14);

struct LiftParams
{
    int Dmax = 40;
    double v = 0.2;       // height at which the kernel coefficient is extracted
    int nodes = 256;      // trapezoid nodes for the extraction
    double tol = 1e-10;   // accuracy of the underlying sums
    double coefficient_tol = 1e-7;
    double mellin_tol = 1e-10;
    double symmetry_tol = 1e-9;
};

/**
 * The computable pieces of the theta lift of Lambda_k against the plus-space Poincare series.
 *
 * (a) the D-th Fourier coefficient of tau -> Lambda_k(tau, z) at height v equals
 *     D^{k-1/2} omega_{k+1,D}(z) e^{-2 pi D v};
 * (b) the Mellin integral matches its Gamma-function value;
 * (c) omega_{k+1,D}(-conj z) = conj(omega_{k+1,D}(z));
 * (d) (1/6) D^{k-1/2} times the Mellin integral equals Gamma(k-1/2)/(6 (4 pi)^{k-1/2}), and
 *     the right-hand side is that constant times omega_{k+1,D}(z).
 * Unfolding the inner product reduces the lift to (a)-(c); the inner product itself is
 * not computed since the plus-space projection is not constructed here.
 */
struct ThetaLiftComponents
{
    double coefficient_residual = 0.0;
    double mellin_residual = 0.0;
    double symmetry_residual = 0.0;
    double constant_residual = 0.0;
    double rhs_constant = 0.0;
    cplx omega_value;
    cplx rhs_value;

    std::vector<VerificationReport> reports;
    bool passed() const { return all_passed(reports); }
};

ThetaLiftComponents theta_lift_components(int k, long D, const UpperHalfPoint & z, const LiftParams & params = {});

} // namespace hypmaass

#endif
