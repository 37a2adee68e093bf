#include "hypmaass/maass_ops.hpp"

#include "hypmaass/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace hypmaass
{

namespace
{

struct Partials
{
    cplx fx;
    cplx fy;
};

Partials first_partials(const SmoothFunction & F, const UpperHalfPoint & z, double h)
{
    const double x = z.x(), y = z.y();
    auto stencil = [&](double dx, double dy) {
        const cplx fp1 = F({x + dx, y + dy});
        const cplx fm1 = F({x - dx, y - dy});
        const cplx fp2 = F({x + 2 * dx, y + 2 * dy});
        const cplx fm2 = F({x - 2 * dx, y - 2 * dy});
        return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    };
    return {stencil(h, 0.0), stencil(0.0, h)};
}

struct SecondPartials
{
    cplx fx;
    cplx fy;
    cplx fxx;
    cplx fyy;
};

SecondPartials second_partials(const SmoothFunction & F, const UpperHalfPoint & z, double h)
{
    const double x = z.x(), y = z.y();
    const cplx f0 = F(z);
    SecondPartials out;
    auto along = [&](double dx, double dy, cplx & d1, cplx & d2) {
        const cplx fp1 = F({x + dx, y + dy});
        const cplx fm1 = F({x - dx, y - dy});
        const cplx fp2 = F({x + 2 * dx, y + 2 * dy});
        const cplx fm2 = F({x - 2 * dx, y - 2 * dy});
        d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
        d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    };
    along(h, 0.0, out.fx, out.fxx);
    along(0.0, h, out.fy, out.fyy);
    return out;
}

double resolve_step(double h, double fallback, const UpperHalfPoint & z)
{
    if (h <= 0.0) {
        return fallback;
    }
    if (!std::isfinite(h)) {
        throw std::invalid_argument("finite difference step must be finite");
    }
    return std::min(h, z.y() / 8.0);
}

// Richardson for fourth-order schemes, with a roughness check on the raw disagreement.
cplx richardson(cplx coarse, cplx fine, double scale, const char * what)
{
    const double gap = std::abs(coarse - fine);
    if (!(gap <= 1e-4 * (1.0 + scale + std::abs(fine)))) {
        throw RoughFunctionError(std::string(what) + ": estimates at h and h/2 disagree by " +
                                 std::to_string(gap));
    }
    return (16.0 * fine - coarse) / 15.0;
}

// w^{-twice/2} on the principal branch.
cplx power_minus(cplx w, int twice)
{
    return std::exp(-0.5 * twice * std::log(w));
}

} // namespace

int kronecker(std::int64_t c, std::int64_t d)
{
    if (d == 0) {
        return (c == 1 || c == -1) ? 1 : 0;
    }
    int result = 1;
    if (d < 0) {
        d = -d;
        if (c < 0) {
            result = -1;
        }
    }
    if (d % 2 == 0) {
        if (c % 2 == 0) {
            return 0;
        }
        const std::int64_t r8 = ((c % 8) + 8) % 8;
        const int two = (r8 == 1 || r8 == 7) ? 1 : -1;
        while (d % 2 == 0) {
            d /= 2;
            result *= two;
        }
    }
    // Jacobi symbol (c/d) for odd d > 0.
    std::int64_t a = ((c % d) + d) % d;
    std::int64_t n = d;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r8 = n % 8;
            if (r8 == 3 || r8 == 5) {
                result = -result;
            }
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) {
            result = -result;
        }
        a %= n;
    }
    return n == 1 ? result : 0;
}

cplx eps(std::int64_t d)
{
    if (d % 2 == 0) {
        throw std::invalid_argument("eps: d must be odd, got " + std::to_string(d));
    }
    return (((d % 4) + 4) % 4 == 1) ? cplx(1.0, 0.0) : cplx(0.0, 1.0);
}

cplx slash(Weight kappa, const GroupElement & g0, const SmoothFunction & F, const UpperHalfPoint & z)
{
    if (kappa.is_integral()) {
        const int k = kappa.twice() / 2;
        cplx jpow = 1.0;
        const cplx j = cocycle(g0, z);
        const cplx base = k >= 0 ? 1.0 / j : j;
        for (int i = 0; i < std::abs(k); ++i) {
            jpow *= base;
        }
        return jpow * F(mobius(g0, z));
    }
    if (g0.c() % 4 != 0) {
        throw std::invalid_argument("half-integral slash needs g in Gamma_0(4)");
    }
    const GroupElement g = g0.d() < 0 ? -g0 : g0;
    // eps_d^{2 kappa}: eps_d is a fourth root of unity, so only 2 kappa mod 4 matters.
    const cplx e = eps(g.d());
    cplx multiplier = static_cast<double>(kronecker(g.c(), g.d()));
    for (int i = 0; i < ((kappa.twice() % 4) + 4) % 4; ++i) {
        multiplier *= e;
    }
    return multiplier * power_minus(cocycle(g, z), kappa.twice()) * F(mobius(g, z));
}

double default_first_step(const UpperHalfPoint & z)
{
    return std::min(1e-3 * std::max(1.0, z.y()), z.y() / 8.0);
}

double default_second_step(const UpperHalfPoint & z)
{
    return std::min(5e-3 * std::max(1.0, z.y()), z.y() / 8.0);
}

cplx wirtinger_dzbar(const SmoothFunction & F, const UpperHalfPoint & z, double h)
{
    h = resolve_step(h, default_first_step(z), z);
    const auto coarse = first_partials(F, z, h);
    const auto fine = first_partials(F, z, h / 2);
    const double scale = std::abs(F(z));
    const cplx fx = richardson(coarse.fx, fine.fx, scale, "wirtinger_dzbar");
    const cplx fy = richardson(coarse.fy, fine.fy, scale, "wirtinger_dzbar");
    return 0.5 * (fx + cplx(0.0, 1.0) * fy);
}

cplx xi(Weight kappa, const SmoothFunction & F, const UpperHalfPoint & z, double h)
{
    return cplx(0.0, 2.0) * std::pow(z.y(), kappa.value()) * std::conj(wirtinger_dzbar(F, z, h));
}

cplx laplacian(Weight kappa, const SmoothFunction & F, const UpperHalfPoint & z, double h)
{
    h = resolve_step(h, default_second_step(z), z);
    const auto coarse = second_partials(F, z, h);
    const auto fine = second_partials(F, z, h / 2);
    const double scale = std::abs(F(z));
    const cplx fx = richardson(coarse.fx, fine.fx, scale, "laplacian");
    const cplx fy = richardson(coarse.fy, fine.fy, scale, "laplacian");
    const cplx fxx = richardson(coarse.fxx, fine.fxx, scale, "laplacian");
    const cplx fyy = richardson(coarse.fyy, fine.fyy, scale, "laplacian");
    const double y = z.y();
    return -y * y * (fxx + fyy) + cplx(0.0, kappa.value() * y) * (fx + cplx(0.0, 1.0) * fy);
}

} // namespace hypmaass
