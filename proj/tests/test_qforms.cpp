#include "doctest.h"

#include "hypmaass/errors.hpp"
#include "hypmaass/qforms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <tuple>

using namespace hypmaass;

namespace
{

using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

Key key(const QForm & Q) { return {Q.a, Q.b, Q.c}; }

// Every form in a coefficient box, filtered by discriminant and |Q(z,1)| <= R.
std::set<Key> brute_force(std::int64_t D, const UpperHalfPoint & z, double R, std::int64_t box)
{
    std::set<Key> out;
    for (std::int64_t a = -box; a <= box; ++a) {
        for (std::int64_t b = -box; b <= box; ++b) {
            for (std::int64_t c = -box; c <= box; ++c) {
                if (b * b - 4 * a * c != D) {
                    continue;
                }
                const std::complex<double> zz = z.z();
                if (std::abs(double(a) * zz * zz + double(b) * zz + double(c)) <= R) {
                    out.insert({a, b, c});
                }
            }
        }
    }
    return out;
}

} // namespace

TEST_SUITE("qforms")
{
    TEST_CASE("discriminant examples")
    {
        CHECK(discriminant({1, 1, -1}) == 5);
        CHECK(discriminant({1, 0, -1}) == 4);
        CHECK(discriminant({0, 1, 0}) == 1);
    }

    TEST_CASE("discriminant overflow is reported")
    {
        CHECK_THROWS_AS(discriminant({1, 4'000'000'000'000, 1}), InputRangeError);
    }

    TEST_CASE("discriminant predicate")
    {
        CHECK(is_discriminant(5));
        CHECK(is_discriminant(8));
        CHECK(is_discriminant(12));
        CHECK_FALSE(is_discriminant(7));
        CHECK_FALSE(is_discriminant(6));
        CHECK_FALSE(is_discriminant(0));
        CHECK_FALSE(is_discriminant(-3));
        CHECK_THROWS_AS(require_discriminant(7), DiscriminantError);
        CHECK_NOTHROW(require_discriminant(13));
    }

    TEST_CASE("upper half-plane points reject y <= 0")
    {
        CHECK_THROWS(UpperHalfPoint(0.0, 0.0));
        CHECK_THROWS(UpperHalfPoint(1.0, -1.0));
    }

    TEST_CASE("evaluate examples")
    {
        const UpperHalfPoint i(0.0, 1.0);
        CHECK(std::abs(evaluate({1, 0, -1}, i) - cplx(-2, 0)) < 1e-15);
        CHECK(std::abs(evaluate({0, 0, 1}, UpperHalfPoint(0.3, 2.7)) - cplx(1, 0)) < 1e-15);
        CHECK(std::abs(evaluate({1, 3, 1}, i) - cplx(0, 3)) < 1e-15);
    }

    TEST_CASE("geodesic invariant examples")
    {
        const UpperHalfPoint i(0.0, 1.0);
        CHECK(geodesic_invariant({1, 0, -1}, i) == doctest::Approx(0.0));
        const UpperHalfPoint z(0.7, 1.9);
        CHECK(geodesic_invariant({0, 1, 0}, z) == doctest::Approx(0.7 / 1.9));
        CHECK(std::abs(geodesic_invariant({1, 1, -1}, i)) < 1e-15);
        // D y^2 + y^2 Q_z^2 = |Q(z,1)|^2 at z = i
        CHECK(std::norm(evaluate({1, 1, -1}, i)) == doctest::Approx(5.0));
    }

    TEST_CASE("z derivative examples")
    {
        const UpperHalfPoint i(0.0, 1.0);
        CHECK(std::abs(z_derivative({1, 0, -1}, i) - cplx(0, 2)) < 1e-15);
        CHECK(std::abs(z_derivative({0, 1, 5}, UpperHalfPoint(-0.4, 0.6)) - cplx(1, 0)) < 1e-15);
        CHECK(std::abs(z_derivative({1, 1, -1}, i) - cplx(1, 2)) < 1e-15);
        const QForm Q{1, 1, -1};
        const cplx lhs = geodesic_invariant(Q, i) * 1.0 + cplx(0, 1) * z_derivative(Q, i);
        CHECK(std::abs(lhs - evaluate(Q, i)) < 1e-15);
    }

    TEST_CASE("group action")
    {
        CHECK(act({1, 0, -1}, GroupElement::T()) == QForm{1, 2, 0});
        const QForm Q{3, -5, 1};
        CHECK(act(Q, GroupElement::identity()) == Q);

        const GroupElement g(2, 1, 7, 4), h(1, -3, 1, -2);
        CHECK(act(act(Q, g), h) == act(Q, g * h));
        CHECK(discriminant(act(Q, g)) == discriminant(Q));
    }

    TEST_CASE("mobius and cocycle")
    {
        const UpperHalfPoint i(0.0, 1.0);
        const auto w = mobius(GroupElement::S(), i);
        CHECK(w.x() == doctest::Approx(0.0));
        CHECK(w.y() == doctest::Approx(1.0));

        const UpperHalfPoint z(0.3, 0.8);
        const auto t = mobius(GroupElement::T(), z);
        CHECK(t.x() == doctest::Approx(1.3));
        CHECK(t.y() == doctest::Approx(0.8));
        CHECK(std::abs(cocycle(GroupElement::T(), z) - cplx(1, 0)) < 1e-15);

        // Chain rule for the cocycle.
        const GroupElement g(2, 1, 7, 4), h(1, -3, 1, -2);
        const cplx lhs = cocycle(g * h, z);
        const cplx rhs = cocycle(g, mobius(h, z)) * cocycle(h, z);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
    }

    TEST_CASE("Q_z is invariant under simultaneous action")
    {
        const QForm Q{2, 3, -4};
        const GroupElement g(3, 2, 4, 3);
        const UpperHalfPoint z(0.21, 0.93);
        // (Q o g)(z) corresponds to Q at g z.
        CHECK(geodesic_invariant(act(Q, g), z) == doctest::Approx(geodesic_invariant(Q, mobius(g, z))).epsilon(1e-12));
    }

    TEST_CASE("reduction to the fundamental domain")
    {
        std::mt19937_64 eng(7);
        std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.01, 2.0);
        for (int t = 0; t < 200; ++t) {
            const UpperHalfPoint z(ux(eng), uy(eng));
            const auto [g, w] = reduce_to_fundamental_domain(z);
            CHECK(std::abs(w.x()) <= 0.5 + 1e-12);
            CHECK(std::norm(w.z()) >= 1.0 - 1e-12);
            const auto gz = mobius(g, z);
            CHECK(std::abs(gz.z() - w.z()) < 1e-9 * std::max(1.0, std::abs(w.z())));
        }
    }

    TEST_CASE("enumeration at D = 5, z = i, R = 3 gives the eight listed forms")
    {
        const UpperHalfPoint i(0.0, 1.0);
        const auto forms = enumerate_bounded(5, i, 3.0);
        std::set<Key> got;
        for (const auto & Q : forms) {
            got.insert(key(Q));
        }
        const std::set<Key> expected{{1, 1, -1}, {1, -1, -1}, {-1, 1, 1},  {-1, -1, 1},
                                     {1, 3, 1},  {1, -3, 1},  {-1, 3, -1}, {-1, -3, -1}};
        CHECK(forms.size() == 8);
        CHECK(got == expected);
        CHECK(got == brute_force(5, i, 3.0, 12));
    }

    TEST_CASE("enumeration below the minimum radius is empty")
    {
        CHECK(enumerate_bounded(5, UpperHalfPoint(0.0, 1.0), 2.0).empty());
    }

    TEST_CASE("enumeration rejects non-discriminants")
    {
        CHECK_THROWS_AS(enumerate_bounded(7, UpperHalfPoint(0.0, 1.0), 3.0), DiscriminantError);
    }

    TEST_CASE("enumeration matches brute force on assorted inputs")
    {
        const std::vector<std::tuple<std::int64_t, UpperHalfPoint, double>> cases{
            {5, UpperHalfPoint(0.1, 1.2), 9.0},  {8, UpperHalfPoint(-0.37, 0.9), 7.5},
            {12, UpperHalfPoint(0.45, 1.7), 11.0}, {13, UpperHalfPoint(0.0, 0.8), 6.0},
            {4, UpperHalfPoint(0.2, 1.1), 6.0},  {9, UpperHalfPoint(-0.3, 1.4), 8.0},
        };
        for (const auto & [D, z, R] : cases) {
            CAPTURE(D);
            const auto forms = enumerate_bounded(D, z, R);
            std::set<Key> got;
            for (const auto & Q : forms) {
                got.insert(key(Q));
                CHECK(discriminant(Q) == D);
            }
            CHECK(got.size() == forms.size());
            CHECK(got == brute_force(D, z, R, 40));
            CHECK(std::is_sorted(forms.begin(), forms.end(), canonical_less));
        }
    }

    TEST_CASE("non-square discriminants have no a = 0 forms")
    {
        for (const auto & Q : enumerate_bounded(8, UpperHalfPoint(0.1, 1.0), 20.0)) {
            CHECK(Q.a != 0);
        }
        bool saw_zero = false;
        for (const auto & Q : enumerate_bounded(9, UpperHalfPoint(0.1, 1.0), 20.0)) {
            saw_zero = saw_zero || Q.a == 0;
        }
        CHECK(saw_zero);
    }

    TEST_CASE("canonical order is total and strict")
    {
        const std::vector<QForm> v{{1, 1, -1}, {-1, 1, 1}, {1, -1, -1}, {2, 1, -1}, {1, 3, 1}};
        for (const auto & P : v) {
            CHECK_FALSE(canonical_less(P, P));
            for (const auto & Q : v) {
                if (!(P == Q)) {
                    CHECK(canonical_less(P, Q) != canonical_less(Q, P));
                }
            }
        }
    }
}
