#include "doctest.h"

#include "hypmaass/errors.hpp"
#include "hypmaass/maass_ops.hpp"
#include "hypmaass/qseries.hpp"
#include "hypmaass/series.hpp"

#include <cmath>
#include <numbers>

using namespace hypmaass;

namespace
{

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

// sum over n in Z of e^{2 pi i n^2 z}, until the terms drop below 1e-17
cplx jacobi_theta(const UpperHalfPoint & z)
{
    cplx s = 1.0;
    for (int n = 1;; ++n) {
        const cplx t = std::exp(2.0 * kPi * kI * double(n) * double(n) * z.z());
        s += 2.0 * t;
        if (std::abs(t) < 1e-17) {
            break;
        }
    }
    return s;
}

// Odd prime p: Euler's criterion.
int legendre(long a, long p)
{
    a %= p;
    if (a < 0) {
        a += p;
    }
    if (a == 0) {
        return 0;
    }
    long r = 1, base = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

} // namespace

TEST_SUITE("maass_ops")
{
    TEST_CASE("weights")
    {
        CHECK(Weight::integral(6).value() == 6.0);
        CHECK(Weight::half_integral(6).value() == 6.5);
        CHECK_FALSE(Weight::half_integral(0).is_integral());
        CHECK(Weight::integral(14).dual().value() == -12.0);
        CHECK(Weight::from_twice(13).twice() == 13);
    }

    TEST_CASE("Kronecker symbol examples")
    {
        for (long c : {-7L, 0L, 1L, 2L, 13L, 100L}) {
            CHECK(kronecker(c, 1) == 1);
        }
        CHECK(kronecker(2, 7) == 1);
        CHECK(kronecker(-4, 7) == -1);
        CHECK(kronecker(2, 3) == -1);
        CHECK(kronecker(0, 2) == 0);
        CHECK(kronecker(3, 6) == 0);
    }

    TEST_CASE("Kronecker symbol against Euler's criterion and multiplicativity")
    {
        for (long p : {3L, 5L, 7L, 11L, 13L, 29L}) {
            for (long c = -40; c <= 40; ++c) {
                CHECK(kronecker(c, p) == legendre(c, p));
            }
        }
        for (long c = -20; c <= 20; ++c) {
            CHECK(kronecker(c, 35) == kronecker(c, 5) * kronecker(c, 7));
            CHECK(kronecker(c, 24) == kronecker(c, 8) * kronecker(c, 3));
        }
    }

    TEST_CASE("eps_d")
    {
        CHECK(eps(1) == cplx(1, 0));
        CHECK(eps(3) == cplx(0, 1));
        CHECK(eps(-3) == cplx(1, 0));
        CHECK(eps(-1) == cplx(0, 1));
        CHECK_THROWS_AS(eps(4), std::invalid_argument);
    }

    TEST_CASE("slash by the identity")
    {
        const SmoothFunction F = [](const UpperHalfPoint & z) { return std::exp(z.z()) * z.y(); };
        const UpperHalfPoint z(0.3, 0.7);
        CHECK(std::abs(slash(Weight::integral(4), GroupElement::identity(), F, z) - F(z)) < 1e-15);
        CHECK(std::abs(slash(Weight::half_integral(2), GroupElement::identity(), F, z) - F(z)) < 1e-15);
    }

    TEST_CASE("theta is invariant under Gamma_0(4) in weight 1/2")
    {
        const SmoothFunction th = jacobi_theta;
        const UpperHalfPoint z(0.07, 0.41);
        for (const GroupElement & g : {GroupElement(1, 0, 4, 1), GroupElement(1, 0, -4, 1), GroupElement(3, -1, 4, -1),
                                       GroupElement(5, 2, 12, 5), GroupElement(-1, 0, 0, -1)}) {
            CAPTURE(g);
            CHECK(std::abs(slash(Weight::half_integral(0), g, th, z) - th(z)) < 1e-9);
        }
    }

    TEST_CASE("half-integral slash outside Gamma_0(4) is rejected")
    {
        const SmoothFunction one = [](const UpperHalfPoint &) { return cplx(1.0); };
        CHECK_THROWS_AS(slash(Weight::half_integral(1), GroupElement::S(), one, UpperHalfPoint(0, 1)),
                        std::invalid_argument);
    }

    TEST_CASE("Delta under S in weight 12")
    {
        const SmoothFunction d = [](const UpperHalfPoint & z) { return evaluate_q(cached_delta(), z).value; };
        const UpperHalfPoint z(0.1, 1.1);
        CHECK(std::abs(slash(Weight::integral(12), GroupElement::S(), d, z) - d(z)) < 1e-8 * std::abs(d(z)));
    }

    TEST_CASE("slash is a right action: (F|h)|g = F|(hg)")
    {
        const SmoothFunction F = [](const UpperHalfPoint & z) { return 1.0 / (z.z() + cplx(0.5, 2.0)) + z.x(); };
        const GroupElement g(2, 1, 1, 1), h(1, 2, 1, 3);
        const UpperHalfPoint z(0.2, 0.6);
        const SmoothFunction Fh = [&](const UpperHalfPoint & w) { return slash(Weight::integral(3), h, F, w); };
        const cplx lhs = slash(Weight::integral(3), h * g, F, z);
        const cplx rhs = slash(Weight::integral(3), g, Fh, z);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));

        // Same law with the theta multiplier on Gamma_0(4).
        const SmoothFunction G = [](const UpperHalfPoint & w) { return std::exp(cplx(0, 1) * w.z()) / (w.z() + 2.0); };
        const GroupElement a(1, 0, 4, 1), b(3, -1, 4, -1);
        const Weight half = Weight::half_integral(2);
        const SmoothFunction Gb = [&](const UpperHalfPoint & w) { return slash(half, b, G, w); };
        const UpperHalfPoint u(0.05, 0.3);
        const cplx l2 = slash(half, b * a, G, u);
        const cplx r2 = slash(half, a, Gb, u);
        CHECK(std::abs(l2 - r2) < 1e-12 * std::abs(l2));
    }

    TEST_CASE("d/dzbar")
    {
        const UpperHalfPoint z(0.3, 0.9);
        const SmoothFunction cube = [](const UpperHalfPoint & w) { return w.z() * w.z() * w.z(); };
        const SmoothFunction bar = [](const UpperHalfPoint & w) { return std::conj(w.z()); };
        CHECK(std::abs(wirtinger_dzbar(cube, z)) < 1e-9);
        CHECK(std::abs(wirtinger_dzbar(bar, z) - 1.0) < 1e-10);

        const QForm Q{1, 1, -1};
        const SmoothFunction qz = [&](const UpperHalfPoint & w) { return cplx(geodesic_invariant(Q, w)); };
        const cplx lhs = 2.0 * kI * z.y() * z.y() * wirtinger_dzbar(qz, z);
        CHECK(std::abs(lhs - evaluate(Q, z)) < 1e-6);
    }

    TEST_CASE("rough functions are flagged")
    {
        const SmoothFunction rough = [](const UpperHalfPoint & w) { return cplx(std::sin(1e5 * w.x())); };
        CHECK_THROWS_AS(wirtinger_dzbar(rough, UpperHalfPoint(0.1, 1.0)), RoughFunctionError);
    }

    TEST_CASE("xi and the Laplacian")
    {
        const UpperHalfPoint z(0.3, 1.1);
        const SmoothFunction hol = [](const UpperHalfPoint & w) { return std::exp(2.0 * kI * w.z()); };
        CHECK(std::abs(xi(Weight::integral(4), hol, z)) < 1e-8);

        const SmoothFunction inv = [](const UpperHalfPoint & w) { return cplx(1.0 / w.y()); };
        // s (1 - s - kappa) y^s with s = -1, kappa = 10
        CHECK(std::abs(laplacian(Weight::integral(10), inv, z) - 8.0 / z.y()) < 1e-5 * 8.0 / z.y());

        // Delta_kappa = -xi_{2-kappa} xi_kappa
        const SmoothFunction G = [](const UpperHalfPoint & w) { return std::pow(w.y(), -1.5) * std::exp(cplx(0, 0.7) * w.x()); };
        const Weight k = Weight::integral(4);
        const SmoothFunction xiG = [&](const UpperHalfPoint & w) { return xi(k, G, w); };
        const cplx lhs = laplacian(k, G, z);
        const cplx rhs = -xi(k.dual(), xiG, z);
        CHECK(std::abs(lhs - rhs) < 1e-4);
    }

    TEST_CASE("xi of a single omega term")
    {
        const int k = 6;
        const QForm Q{1, 1, -1};
        const UpperHalfPoint z(0.3, 1.1);
        const SmoothFunction term = [&](const UpperHalfPoint & w) { return omega_term(Q, k, w); };
        const cplx lhs = xi(Weight::integral(2 * k + 2), term, z);
        const cplx zbar = std::conj(z.z());
        const cplx rhs = -std::pow(z.y(), 2 * k) / std::pow(zbar * zbar + zbar - 1.0, k);
        CHECK(std::abs(lhs - rhs) < 1e-5);
    }

    TEST_CASE("omega is an eigenfunction of the weight 2k+2 Laplacian")
    {
        const int k = 6;
        const SmoothFunction om = [&](const UpperHalfPoint & w) { return omega(SeriesParams(k, 5, 1e-13), w).value; };
        const UpperHalfPoint z(0.12, 1.25);
        const cplx w = om(z);
        CHECK(std::abs(laplacian(Weight::integral(2 * k + 2), om, z) - 2.0 * k * w) < 1e-4 * (1.0 + std::abs(w)));
    }

    TEST_CASE("default steps")
    {
        CHECK(default_first_step(UpperHalfPoint(0, 2)) == doctest::Approx(2e-3));
        CHECK(default_second_step(UpperHalfPoint(0, 2)) == doctest::Approx(1e-2));
        CHECK(default_first_step(UpperHalfPoint(0, 0.004)) == doctest::Approx(0.0005));
    }
}
