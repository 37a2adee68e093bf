#include "hypmaass/theta.hpp"

#include "hypmaass/compensated.hpp"
#include "hypmaass/errors.hpp"
#include "hypmaass/maass_ops.hpp"
#include "hypmaass/series.hpp"

#include <limits>
#include <numbers>
#include <string>

namespace hypmaass
{

namespace
{

constexpr double kPi = std::numbers::pi;

} // namespace

Mat3Q VignerasSetup::gram()
{
    Mat3Q A;
    for (auto & row : A) {
        for (auto & e : row) {
            e = 0;
        }
    }
    A[0][2] = -4;
    A[2][0] = -4;
    A[1][1] = 2;
    return A;
}

Mat3Q VignerasSetup::gram_inverse()
{
    Mat3Q B;
    for (auto & row : B) {
        for (auto & e : row) {
            e = 0;
        }
    }
    B[0][2] = mpq_class(-1, 4);
    B[2][0] = mpq_class(-1, 4);
    B[1][1] = mpq_class(1, 2);
    return B;
}

Mat3Q multiply(const Mat3Q & A, const Mat3Q & B)
{
    Mat3Q C;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            mpq_class s = 0;
            for (int l = 0; l < 3; ++l) {
                s += A[i][l] * B[l][j];
            }
            C[i][j] = s;
        }
    }
    return C;
}

double isotropic_pairing(const UpperHalfPoint & z)
{
    // (1/2) s^T A conj(s) with s = (1/2, z, z^2/2).
    const cplx zz = z.z();
    const std::array<cplx, 3> s{0.5, zz, 0.5 * zz * zz};
    const auto A = VignerasSetup::gram();
    cplx acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            acc += s[i] * A[i][j].get_d() * std::conj(s[j]);
        }
    }
    return 0.5 * acc.real();
}

cplx vigneras_p(int k, const UpperHalfPoint & z, const Triple & w)
{
    return vigneras_p<double>(k, z, w).value();
}

template <typename T>
std::complex<T> vigneras_residual_t(int k, const UpperHalfPoint & z, const std::array<T, 3> & w, double delta)
{
    const T q = w[1] * w[1] - T(4) * w[0] * w[2];
    if (q < T(0)) {
        return 0;
    }
    if (!(q > T(delta))) {
        throw InputRangeError("vigneras_residual: q(w) = " + std::to_string(static_cast<double>(q)) +
                              " is within " + std::to_string(delta) + " of the light cone");
    }
    const auto p = vigneras_p<T>(k, z, w);
    const auto Ainv = VignerasSetup::gram_inverse();
    std::complex<T> euler = 0;
    std::complex<T> lap = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        euler += w[i] * p.d(i);
        for (std::size_t j = 0; j < 3; ++j) {
            const T m = static_cast<T>(Ainv[i][j].get_d());
            if (m != T(0)) {
                lap += m * p.dd(i, j);
            }
        }
    }
    const T four_pi = T(4) * std::numbers::pi_v<T>;
    return euler - lap / four_pi - T(VignerasSetup::eigenvalue(k)) * p.value();
}

template std::complex<double> vigneras_residual_t<double>(int, const UpperHalfPoint &, const std::array<double, 3> &,
                                                          double);
template std::complex<long double> vigneras_residual_t<long double>(int, const UpperHalfPoint &,
                                                                    const std::array<long double, 3> &, double);

cplx vigneras_residual(int k, const UpperHalfPoint & z, const Triple & w, double delta)
{
    return vigneras_residual_t<double>(k, z, w, delta);
}

ThetaKernel::ThetaKernel(KernelKind kind, int k, const UpperHalfPoint & z, int Dmax, double tol)
    : kind_(kind), k_(k), dmax_(Dmax), tol_(tol), coeff_(static_cast<std::size_t>(std::max(Dmax, 0)) + 1)
{
    require_weight_parameter(k);
    if (Dmax < 1) {
        throw std::invalid_argument("ThetaKernel: Dmax must be positive");
    }
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument("ThetaKernel: tolerance must be positive and finite");
    }
    for (int D = 1; D <= Dmax; ++D) {
        if (!is_discriminant(D)) {
            continue;
        }
        const auto s = hyperbolic_sums(SeriesParams(k, D, tol / Dmax), z);
        const TruncatedValue & inner = kind == KernelKind::omega ? s.f : s.omega;
        if (!inner.converged) {
            throw ConvergenceError("ThetaKernel: inner sum for D = " + std::to_string(D) + " did not converge");
        }
        max_inner_ = std::max(max_inner_, std::abs(inner.value));
        coeff_[static_cast<std::size_t>(D)] = std::pow(static_cast<double>(D), k - 0.5) * inner.value;
    }
}

cplx ThetaKernel::coefficient(int n) const
{
    if (n < 0 || n > dmax_) {
        throw std::out_of_range("ThetaKernel::coefficient: index outside 0..Dmax");
    }
    return coeff_[static_cast<std::size_t>(n)];
}

double ThetaKernel::tail_bound(double v) const
{
    const double e = k_ - 0.5;
    const double N = dmax_;
    const double r = std::exp(-2.0 * kPi * v) * std::pow((N + 1.0) / N, e);
    if (r >= 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::pow(N + 1.0, e) * max_inner_ * std::exp(-2.0 * kPi * (N + 1.0) * v) / (1.0 - r);
}

double ThetaKernel::min_height() const
{
    double lo = 1e-4, hi = 1.0;
    while (tail_bound(hi) > tol_) {
        hi *= 2.0;
    }
    if (tail_bound(lo) <= tol_) {
        return lo;
    }
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (tail_bound(mid) > tol_ ? lo : hi) = mid;
    }
    return hi;
}

cplx ThetaKernel::operator()(const UpperHalfPoint & tau) const
{
    if (tail_bound(tau.y()) > tol_) {
        throw ConvergenceError("theta kernel: Im(tau) = " + std::to_string(tau.y()) +
                               " is below the height " + std::to_string(min_height()) + " needed for Dmax = " +
                               std::to_string(dmax_));
    }
    ComplexCompensatedSum sum;
    for (int n = 1; n <= dmax_; ++n) {
        const cplx c = coeff_[static_cast<std::size_t>(n)];
        if (c == cplx(0.0)) {
            continue;
        }
        const double phase = 2.0 * kPi * std::fmod(n * tau.x(), 1.0);
        sum.add(c * std::polar(std::exp(-2.0 * kPi * n * tau.y()), phase));
    }
    return sum.value();
}

cplx omega_kernel(int k, const UpperHalfPoint & tau, const UpperHalfPoint & z, int Dmax, double tol)
{
    return ThetaKernel(KernelKind::omega, k, z, Dmax, tol)(tau);
}

cplx lambda_kernel(int k, const UpperHalfPoint & tau, const UpperHalfPoint & z, int Dmax, double tol)
{
    return ThetaKernel(KernelKind::lambda, k, z, Dmax, tol)(tau);
}

cplx kernel_fourier_coefficient(const ThetaKernel & kernel, int n, double v, int M)
{
    if (M < 1) {
        throw std::invalid_argument("kernel_fourier_coefficient: M must be positive");
    }
    ComplexCompensatedSum sum;
    for (int j = 0; j < M; ++j) {
        const double u = static_cast<double>(j) / M;
        const double phase = -2.0 * kPi * std::fmod(static_cast<double>(n) * j / M, 1.0);
        sum.add(kernel(UpperHalfPoint(u, v)) * std::polar(1.0, phase));
    }
    return sum.value() / static_cast<double>(M);
}

std::vector<int> plus_space_violations(const ThetaKernel & kernel, double v, double tol)
{
    std::vector<int> out;
    for (int n = 1; n <= kernel.dmax(); ++n) {
        if (n % 4 != 2 && n % 4 != 3) {
            continue;
        }
        if (std::abs(kernel_fourier_coefficient(kernel, n, v)) > tol) {
            out.push_back(n);
        }
    }
    return out;
}

std::vector<int> plus_space_violations(int k, const UpperHalfPoint & z, double v, int Dmax, double tol)
{
    return plus_space_violations(ThetaKernel(KernelKind::lambda, k, z, Dmax), v, tol);
}

double half_integral_modularity_residual(const ThetaKernel & lambda, const GroupElement & g,
                                         const UpperHalfPoint & tau)
{
    const double need = lambda.min_height();
    const UpperHalfPoint image = mobius(g, tau);
    if (tau.y() < need || image.y() < need) {
        throw ConvergenceError("half_integral_modularity_residual: Im(tau) = " + std::to_string(tau.y()) +
                               " and Im(g tau) = " + std::to_string(image.y()) + " must both reach " +
                               std::to_string(need));
    }
    const SmoothFunction F = [&lambda](const UpperHalfPoint & t) { return lambda(t); };
    return std::abs(slash(Weight::half_integral(lambda.k()), g, F, tau) - lambda(tau));
}

double half_integral_modularity_residual(int k, const GroupElement & g, const UpperHalfPoint & tau,
                                         const UpperHalfPoint & z, int Dmax, double tol)
{
    return half_integral_modularity_residual(ThetaKernel(KernelKind::lambda, k, z, Dmax, tol), g, tau);
}

} // namespace hypmaass
