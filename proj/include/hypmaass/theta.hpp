#ifndef HYPMAASS_THETA_HPP
#define HYPMAASS_THETA_HPP

#include "hypmaass/jet.hpp"
#include "hypmaass/qforms.hpp"

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace hypmaass
{

using Mat3Q = std::array<std::array<mpq_class, 3>, 3>;
using Triple = std::array<double, 3>;

/// The lattice Z^3 with q(a,b,c) = b^2 - 4ac, its Gram matrix and level.
struct VignerasSetup
{
    static constexpr int dimension = 3;
    static constexpr int level = 4;

    static Mat3Q gram();         // A with q(w) = w^T A w / 2
    static Mat3Q gram_inverse(); // exact inverse of A

    static double q(const Triple & w) { return w[1] * w[1] - 4.0 * w[0] * w[2]; }

    // lambda = k - 1
    static int eigenvalue(int k) { return k - 1; }
};

// Product of two rational 3x3 matrices.
Mat3Q multiply(const Mat3Q & A, const Mat3Q & B);

// <s, conj s>_q for s = (1/2, z, z^2/2); equals |z|^2 - Re(z^2) = 2y^2.
double isotropic_pairing(const UpperHalfPoint & z);

/// p(a,b,c) = q^{k-1/2} ((a|z|^2 + bx + c)/y) / (az^2 + bz + c)^{k+1} for q = b^2 - 4ac > 0,
/// and 0 otherwise.
template <typename T>
Jet2<T> vigneras_p(int k, const UpperHalfPoint & z, const std::array<T, 3> & w)
{
    using J = Jet2<T>;
    using C = std::complex<T>;
    const T q0 = w[1] * w[1] - T(4) * w[0] * w[2];
    if (!(q0 > T(0))) {
        return J(C(0));
    }
    const J a = J::variable(0, w[0]);
    const J b = J::variable(1, w[1]);
    const J c = J::variable(2, w[2]);
    const T x = z.x(), y = z.y();
    const C zz(x, y);
    const J q = b * b - T(4) * (a * c);
    const J qz = (a * (x * x + y * y) + b * x + c) * (T(1) / y);
    const J Q = a * (zz * zz) + b * zz + c;
    return q.pow(T(k) - T(0.5)) * qz / Q.ipow(k + 1);
}

// Plain value of p.
cplx vigneras_p(int k, const UpperHalfPoint & z, const Triple & w);

/// (E - Delta_A / 4 pi) p - (k - 1) p with E = sum w_j d/dw_j and
/// Delta_A = sum (A^{-1})_{ij} d_i d_j, all derivatives from jet arithmetic.
/// Returns 0 on the zero branch q(w) < 0; rejects 0 <= q(w) <= delta with InputRangeError.
template <typename T>
std::complex<T> vigneras_residual_t(int k, const UpperHalfPoint & z, const std::array<T, 3> & w,
                                    double delta = 1e-3);

cplx vigneras_residual(int k, const UpperHalfPoint & z, const Triple & w, double delta = 1e-3);

enum class KernelKind
{
    omega, // sum D^{k-1/2} f_{k,D}(z) e(D tau)
    lambda // sum D^{k-1/2} omega_{k+1,D}(z) e(D tau)
};

/**
 * One of the two theta kernels with z fixed, truncated to discriminants D <= Dmax.
 *
 * The per-D coefficients are computed once on construction (accuracy tol/Dmax each),
 * so evaluating in tau is cheap. Square discriminants are part of the sum.
 */
class ThetaKernel
{
public:
    ThetaKernel(KernelKind kind, int k, const UpperHalfPoint & z, int Dmax, double tol = 1e-10);

    int k() const { return k_; }
    int dmax() const { return dmax_; }
    double tol() const { return tol_; }

    // D^{k-1/2} times f_{k,D}(z) or omega_{k+1,D}(z); zero for non-discriminants.
    cplx coefficient(int n) const;

    // Largest |f_{k,D}(z)| or |omega_{k+1,D}(z)| over D <= Dmax.
    double max_inner() const { return max_inner_; }

    // Bound on the terms D > Dmax at height v.
    double tail_bound(double v) const;

    // Smallest height at which tail_bound(v) <= tol.
    double min_height() const;

    // Throws ConvergenceError when Im(tau) is below min_height().
    cplx operator()(const UpperHalfPoint & tau) const;

private:
    KernelKind kind_;
    int k_;
    int dmax_;
    double tol_;
    double max_inner_ = 0.0;
    std::vector<cplx> coeff_; // index n = 0..Dmax
};

cplx omega_kernel(int k, const UpperHalfPoint & tau, const UpperHalfPoint & z, int Dmax, double tol = 1e-10);
cplx lambda_kernel(int k, const UpperHalfPoint & tau, const UpperHalfPoint & z, int Dmax, double tol = 1e-10);

// Fourier coefficient of tau -> kernel(tau) at index n and height v, by an M-node trapezoid
// in u. This is the raw coefficient, including the factor e^{-2 pi n v}.
cplx kernel_fourier_coefficient(const ThetaKernel & kernel, int n, double v, int M = 256);

/// Indices n <= Dmax with n = 2, 3 mod 4 whose extracted Lambda_k coefficient exceeds tol.
std::vector<int> plus_space_violations(int k, const UpperHalfPoint & z, double v, int Dmax, double tol = 1e-9);
std::vector<int> plus_space_violations(const ThetaKernel & kernel, double v, double tol = 1e-9);

/// |(Lambda_k(., z) |_{k+1/2} g)(tau) - Lambda_k(tau, z)| for g in Gamma_0(4).
double half_integral_modularity_residual(const ThetaKernel & lambda, const GroupElement & g,
                                         const UpperHalfPoint & tau);
double half_integral_modularity_residual(int k, const GroupElement & g, const UpperHalfPoint & tau,
                                         const UpperHalfPoint & z, int Dmax, double tol = 1e-10);

} // namespace hypmaass

#endif
