#include "hypmaass/qforms.hpp"

#include "hypmaass/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>
#include <tuple>

namespace hypmaass
{

namespace
{

std::int64_t checked(__int128 v, const char * what)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw InputRangeError(std::string(what) + ": result exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

// Enumeration coefficients are bounded so that b^2 stays far below 2^63.
constexpr double kMaxCoefficient = 1.0e9;

} // namespace

UpperHalfPoint::UpperHalfPoint(double x, double y) : x_(x), y_(y)
{
    if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
        throw std::invalid_argument("UpperHalfPoint requires finite x and y > 0");
    }
}

cplx UpperHalfPoint::q() const
{
    const double two_pi = 2.0 * std::numbers::pi;
    return std::polar(std::exp(-two_pi * y_), two_pi * x_);
}

GroupElement::GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d)
{
    const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (det != 1) {
        throw std::invalid_argument("GroupElement must have determinant 1");
    }
}

GroupElement operator*(const GroupElement & g, const GroupElement & h)
{
    using i128 = __int128;
    const char * what = "GroupElement product";
    return {checked(i128(g.a()) * h.a() + i128(g.b()) * h.c(), what),
            checked(i128(g.a()) * h.b() + i128(g.b()) * h.d(), what),
            checked(i128(g.c()) * h.a() + i128(g.d()) * h.c(), what),
            checked(i128(g.c()) * h.b() + i128(g.d()) * h.d(), what)};
}

std::ostream & operator<<(std::ostream & os, const GroupElement & g)
{
    return os << "[[" << g.a() << "," << g.b() << "],[" << g.c() << "," << g.d() << "]]";
}

std::ostream & operator<<(std::ostream & os, const QForm & Q)
{
    return os << "[" << Q.a << "," << Q.b << "," << Q.c << "]";
}

std::int64_t discriminant(const QForm & Q)
{
    const __int128 D = static_cast<__int128>(Q.b) * Q.b - 4 * static_cast<__int128>(Q.a) * Q.c;
    return checked(D, "discriminant");
}

bool is_discriminant(std::int64_t D)
{
    return D > 0 && (D % 4 == 0 || D % 4 == 1);
}

void require_discriminant(std::int64_t D)
{
    if (!is_discriminant(D)) {
        throw DiscriminantError("D = " + std::to_string(D) +
                                " is not a positive discriminant (need D > 0, D = 0 or 1 mod 4)");
    }
}

bool is_square(std::int64_t n)
{
    if (n < 0) {
        return false;
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r * r == n;
}

cplx evaluate(const QForm & Q, const UpperHalfPoint & z)
{
    const double a = static_cast<double>(Q.a);
    const double b = static_cast<double>(Q.b);
    const double c = static_cast<double>(Q.c);
    const double x = z.x();
    const double y = z.y();
    return {a * (x * x - y * y) + b * x + c, y * (2.0 * a * x + b)};
}

double geodesic_invariant(const QForm & Q, const UpperHalfPoint & z)
{
    const double a = static_cast<double>(Q.a);
    const double b = static_cast<double>(Q.b);
    const double c = static_cast<double>(Q.c);
    const double x = z.x();
    const double y = z.y();
    return (a * (x * x + y * y) + b * x + c) / y;
}

cplx z_derivative(const QForm & Q, const UpperHalfPoint & z)
{
    const double a = static_cast<double>(Q.a);
    return {2.0 * a * z.x() + static_cast<double>(Q.b), 2.0 * a * z.y()};
}

QForm act(const QForm & Q, const GroupElement & g)
{
    using i128 = __int128;
    const i128 A = Q.a, B = Q.b, C = Q.c;
    const i128 a = g.a(), b = g.b(), c = g.c(), d = g.d();
    const char * what = "form action";
    return {checked(A * a * a + B * a * c + C * c * c, what),
            checked(2 * A * a * b + B * (a * d + b * c) + 2 * C * c * d, what),
            checked(A * b * b + B * b * d + C * d * d, what)};
}

cplx cocycle(const GroupElement & g, const UpperHalfPoint & z)
{
    return {static_cast<double>(g.c()) * z.x() + static_cast<double>(g.d()),
            static_cast<double>(g.c()) * z.y()};
}

UpperHalfPoint mobius(const GroupElement & g, const UpperHalfPoint & z)
{
    const double a = static_cast<double>(g.a());
    const double b = static_cast<double>(g.b());
    const double c = static_cast<double>(g.c());
    const double d = static_cast<double>(g.d());
    const double x = z.x();
    const double y = z.y();
    const double den = (c * x + d) * (c * x + d) + c * c * y * y;
    return {((a * x + b) * (c * x + d) + a * c * y * y) / den, y / den};
}

std::pair<GroupElement, UpperHalfPoint> reduce_to_fundamental_domain(const UpperHalfPoint & z)
{
    GroupElement g = GroupElement::identity();
    UpperHalfPoint w = z;
    for (int iter = 0; iter < 10000; ++iter) {
        const auto n = static_cast<std::int64_t>(std::floor(w.x() + 0.5));
        if (n != 0) {
            g = GroupElement::T(-n) * g;
            w = UpperHalfPoint(w.x() - static_cast<double>(n), w.y());
        }
        const double r2 = w.x() * w.x() + w.y() * w.y();
        if (r2 >= 1.0 - 1e-15) {
            return {g, w};
        }
        g = GroupElement::S() * g;
        w = UpperHalfPoint(-w.x() / r2, w.y() / r2);
    }
    throw ConvergenceError("reduce_to_fundamental_domain did not terminate");
}

bool canonical_less(const QForm & P, const QForm & Q)
{
    auto key = [](const QForm & F) {
        return std::make_tuple(F.a < 0 ? -F.a : F.a, F.a, F.b < 0 ? -F.b : F.b, F.b,
                               F.c < 0 ? -F.c : F.c, F.c);
    };
    return key(P) < key(Q);
}

std::vector<QForm> enumerate_bounded(std::int64_t D, const UpperHalfPoint & z, double R)
{
    require_discriminant(D);
    std::vector<QForm> out;
    const double x = z.x();
    const double y = z.y();
    const double Dd = static_cast<double>(D);
    if (!(R >= 0.0) || R * R < Dd * y * y) {
        return out;
    }
    if (R / (y * y) > kMaxCoefficient || R / y > kMaxCoefficient || std::abs(x) * R / (y * y) > kMaxCoefficient) {
        throw InputRangeError("enumerate_bounded: radius too large for 64-bit coefficients");
    }

    // |Q|^2 <= R^2 with a relative slack of a few ulps so that forms lying exactly on the
    // boundary are kept regardless of rounding.
    const double R2 = R * R * (1.0 + 8.0 * std::numeric_limits<double>::epsilon());
    auto inside = [&](const QForm & Q) { return std::norm(evaluate(Q, z)) <= R2; };

    // a = 0 requires b^2 = D.
    if (is_square(D)) {
        const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(Dd)));
        const double w = std::sqrt(std::max(0.0, R * R - Dd * y * y));
        for (const std::int64_t b : {r, -r}) {
            const double centre = -static_cast<double>(b) * x;
            const auto lo = static_cast<std::int64_t>(std::floor(centre - w)) - 1;
            const auto hi = static_cast<std::int64_t>(std::ceil(centre + w)) + 1;
            for (std::int64_t c = lo; c <= hi; ++c) {
                const QForm Q{0, b, c};
                if (inside(Q)) {
                    out.push_back(Q);
                }
            }
        }
    }

    // For a != 0 write s = 2ax + b, so 4a Q(z,1) = (s + 2iay)^2 - D and
    //   16 a^2 |Q|^2 = (s^2 - 4a^2y^2 - D)^2 + 16 a^2 y^2 s^2.
    // The bound is a quadratic inequality in t = s^2, solved per a.
    const auto amax = static_cast<std::int64_t>(std::floor(R / (y * y))) + 1;
    const std::int64_t parity = D & 1;
    for (std::int64_t a = -amax; a <= amax; ++a) {
        if (a == 0) {
            continue;
        }
        const double ad = static_cast<double>(a);
        const double A = 4.0 * ad * ad * y * y + Dd;
        const double B = 16.0 * ad * ad * y * y;
        const double C = 16.0 * ad * ad * R * R;
        const double disc = B * B - 4.0 * A * B + 4.0 * C;
        if (disc < 0.0) {
            continue;
        }
        const double sq = std::sqrt(disc);
        const double t_hi = 0.5 * ((2.0 * A - B) + sq);
        if (t_hi < 0.0) {
            continue;
        }
        const double t_lo = std::max(0.0, 0.5 * ((2.0 * A - B) - sq));
        const double s_hi = std::sqrt(t_hi);
        const double s_lo = std::sqrt(t_lo);
        const std::int64_t four_a = 4 * (a < 0 ? -a : a);
        const double shift = 2.0 * ad * x;

        auto scan = [&](double s_from, double s_to) {
            auto lo = static_cast<std::int64_t>(std::floor(s_from - shift)) - 1;
            const auto hi = static_cast<std::int64_t>(std::ceil(s_to - shift)) + 1;
            if (((lo - parity) % 2) != 0) {
                ++lo;
            }
            for (std::int64_t b = lo; b <= hi; b += 2) {
                const std::int64_t num = b * b - D;
                if (num % four_a != 0) {
                    continue;
                }
                const QForm Q{a, b, num / (4 * a)};
                if (inside(Q)) {
                    out.push_back(Q);
                }
            }
        };
        if (s_lo > 1.0) {
            scan(-s_hi, -s_lo);
            scan(s_lo, s_hi);
        } else {
            scan(-s_hi, s_hi);
        }
    }

    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace hypmaass
