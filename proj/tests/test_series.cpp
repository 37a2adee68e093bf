#include "doctest.h"

#include "hypmaass/errors.hpp"
#include "hypmaass/series.hpp"

#include <cmath>
#include <numbers>

using namespace hypmaass;

namespace
{

constexpr double kPi = std::numbers::pi;

// Plain double loop over a coefficient box; independent of the radius enumeration.
cplx box_sum_f(int k, std::int64_t D, const UpperHalfPoint & z, std::int64_t box)
{
    cplx s = 0;
    for (std::int64_t a = -box; a <= box; ++a) {
        if (a == 0) {
            continue;
        }
        for (std::int64_t b = -box; b <= box; ++b) {
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) {
                continue;
            }
            const std::int64_t c = num / (4 * a);
            const cplx zz = z.z();
            s += std::pow(double(a) * zz * zz + double(b) * zz + double(c), -k);
        }
    }
    return s;
}

cplx delta_at(const UpperHalfPoint & z) { return evaluate_q(cached_delta(), z).value; }

} // namespace

TEST_SUITE("series")
{
    TEST_CASE("weight parameter validation")
    {
        CHECK_THROWS_AS(require_weight_parameter(3), std::invalid_argument);
        CHECK_THROWS_AS(require_weight_parameter(2), std::invalid_argument);
        CHECK_NOTHROW(require_weight_parameter(4));
        CHECK_THROWS_AS(SeriesParams(6, 7), DiscriminantError);
        CHECK_THROWS(SeriesParams(6, 5, 0.0));
    }

    TEST_CASE("f_{6,5} against a brute-force box sum")
    {
        const UpperHalfPoint z(0.1, 1.2);
        const auto f = f_hyperbolic(SeriesParams(6, 5, 1e-12), z);
        CHECK(f.converged);
        CHECK(std::abs(f.value - box_sum_f(6, 5, z, 400)) < 1e-7);
        CHECK(std::abs(f.value - cplx(-0.00847657582854, -0.00606189033253)) < 1e-12);
    }

    TEST_CASE("omega_{7,5} reference value")
    {
        const auto w = omega(SeriesParams(6, 5, 1e-12), UpperHalfPoint(0.1, 1.2));
        CHECK(w.converged);
        CHECK(std::abs(w.value - cplx(0.00176889455488, 0.00116414629136)) < 1e-12);
    }

    TEST_CASE("per-term splitting f = y (omega - holomorphic)")
    {
        const UpperHalfPoint z(0.23, 0.87);
        for (const QForm & Q : {QForm{1, 1, -1}, QForm{2, 3, -1}, QForm{-3, 5, 2}}) {
            const cplx lhs = z.y() * (omega_term(Q, 6, z) - holomorphic_term(Q, 6, z));
            CHECK(std::abs(lhs - f_term(Q, 6, z)) < 1e-14 * std::abs(f_term(Q, 6, z)));
        }
    }

    TEST_CASE("summed splitting and symmetry")
    {
        const UpperHalfPoint z(-0.31, 1.4);
        const auto s = hyperbolic_sums(SeriesParams(6, 8, 1e-12), z);
        CHECK(std::abs(z.y() * (s.omega.value - s.holomorphic.value) - s.f.value) < 1e-10);

        const auto r = hyperbolic_sums(SeriesParams(6, 8, 1e-12), z.reflect());
        CHECK(std::abs(r.f.value - std::conj(s.f.value)) < 1e-11);
        CHECK(std::abs(r.omega.value - std::conj(s.omega.value)) < 1e-11);
    }

    TEST_CASE("f_{k,D} is real on the imaginary axis")
    {
        for (double y : {0.9, 1.3, 2.0}) {
            const auto f = f_hyperbolic(SeriesParams(6, 5, 1e-12), UpperHalfPoint(0.0, y));
            CHECK(std::abs(f.value.imag()) < 1e-12);
        }
    }

    TEST_CASE("f_{6,D} is proportional to Delta")
    {
        const UpperHalfPoint a(0.1, 1.2), b(-0.4, 0.95), c(0.33, 1.6);
        for (std::int64_t D : {5, 8, 12}) {
            const SeriesParams p(6, D, 1e-12);
            const cplx ra = f_hyperbolic(p, a).value / delta_at(a);
            const cplx rb = f_hyperbolic(p, b).value / delta_at(b);
            const cplx rc = f_hyperbolic(p, c).value / delta_at(c);
            CHECK(std::abs(ra - rb) < 1e-7 * std::abs(ra));
            CHECK(std::abs(ra - rc) < 1e-7 * std::abs(ra));
            CHECK(std::abs(ra.imag()) < 1e-7 * std::abs(ra));
        }
    }

    TEST_CASE("dimension zero: k = 4 sums vanish")
    {
        const UpperHalfPoint z(0.15, 1.1);
        const auto s = hyperbolic_sums(SeriesParams(4, 5, 1e-8), z);
        CHECK(s.f.converged);
        CHECK(std::abs(s.f.value) < 1e-6);
        CHECK(std::abs(s.omega.value) < 1e-6);
        CHECK(std::abs(s.holomorphic.value) < 1e-6);
        CHECK(s.f.terms > 100);
    }

    TEST_CASE("convergence bookkeeping")
    {
        const auto f = f_hyperbolic(SeriesParams(8, 13, 1e-10), UpperHalfPoint(0.2, 0.9));
        CHECK(f.converged);
        CHECK(f.tail_bound <= 1e-10);
        CHECK(f.radius_used > 0.0);
        SumBudget tiny;
        tiny.max_doublings = 0;
        const auto s = hyperbolic_sums(SeriesParams(6, 5, 1e-14), UpperHalfPoint(0.0, 1.0), tiny);
        CHECK_FALSE(s.f.converged);
    }

    TEST_CASE("E2 and E2*")
    {
        const UpperHalfPoint i(0.0, 1.0);
        CHECK(std::abs(e2_star(i)) < 1e-12);
        CHECK(std::abs(e2(i) - 3.0 / kPi) < 1e-12);
        const UpperHalfPoint z(0.2, 1.1);
        const UpperHalfPoint w = mobius(GroupElement::S(), z);
        const cplx zz = z.z();
        CHECK(std::abs(e2(w) - zz * zz * e2(z) - 12.0 * zz / (2.0 * kPi * cplx(0, 1))) < 1e-10);
        CHECK(std::abs(e2_star(w) - zz * zz * e2_star(z)) < 1e-10);
    }

    TEST_CASE("generating function of the Faber functions")
    {
        const UpperHalfPoint z(0.1, 1.1), tau(0.3, 1.5);
        const auto h0 = h_generating(z, tau, 0);
        CHECK(std::abs(h0.value - 1.0) < 1e-15);
        const auto h = h_generating(z, tau, 30);
        CHECK(std::abs(h.value - akn_closed_form(z, tau)) < 1e-7);
        CHECK_THROWS(h_generating(z, UpperHalfPoint(0.0, 1.0), 10));
    }

    TEST_CASE("equivalent points make the closed form singular")
    {
        const UpperHalfPoint z(0.1, 0.5);
        CHECK_THROWS_AS(akn_closed_form(z, mobius(GroupElement::S(), z)), PoleError);
    }

    TEST_CASE("divisor forms for k = 6 vanish and agree")
    {
        const SeriesParams p(6, 5, 1e-12);
        for (const auto & z : {UpperHalfPoint(0.1, 1.2), UpperHalfPoint(-0.25, 0.95)}) {
            const cplx a = divisor_form_bko(p, z);
            const cplx b = divisor_form_thm(p, z);
            CHECK(std::abs(a - b) < 1e-5);
            CHECK(std::abs(a) < 1e-5);
        }
    }

    TEST_CASE("divisor forms refuse a vanishing f")
    {
        CHECK_THROWS_AS(divisor_form_bko(SeriesParams(4, 5, 1e-8), UpperHalfPoint(0.1, 1.2)), IllConditionedError);
    }

    TEST_CASE("Poincare series of exponential type")
    {
        const UpperHalfPoint z(0.12, 1.05), z1(1.12, 1.05);
        const auto p = poincare_exponential(12, 1, z, 12);
        const auto p1 = poincare_exponential(12, 1, z1, 12);
        CHECK(std::abs(p.value - p1.value) < 1e-9 * std::abs(p.value));

        const UpperHalfPoint w(-0.3, 1.4);
        const cplx r1 = p.value / delta_at(z);
        const cplx r2 = poincare_exponential(12, 1, w, 12).value / delta_at(w);
        CHECK(std::abs(r1 - r2) < 1e-6 * std::abs(r1));
        CHECK_THROWS(poincare_exponential(5, 1, z, 12));
        CHECK_THROWS(poincare_exponential(2, 1, z, 12));
    }
}
