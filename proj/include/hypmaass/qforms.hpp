#ifndef HYPMAASS_QFORMS_HPP
#define HYPMAASS_QFORMS_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace hypmaass
{

using cplx = std::complex<double>;

/// A point z = x + iy of the upper half-plane; y > 0 is enforced on construction.
class UpperHalfPoint
{
public:
    UpperHalfPoint(double x, double y);
    explicit UpperHalfPoint(cplx z) : UpperHalfPoint(z.real(), z.imag()) {}

    double x() const { return x_; }
    double y() const { return y_; }
    cplx z() const { return {x_, y_}; }

    // e^{2 pi i z}
    cplx q() const;

    // -conj(z), the reflection in the imaginary axis.
    UpperHalfPoint reflect() const { return {-x_, y_}; }

private:
    double x_;
    double y_;
};

/// Integer 2x2 matrix [[a, b], [c, d]] of determinant one.
class GroupElement
{
public:
    GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static GroupElement identity() { return {1, 0, 0, 1}; }
    static GroupElement S() { return {0, -1, 1, 0}; }
    static GroupElement T(std::int64_t n = 1) { return {1, n, 0, 1}; }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }

    GroupElement inverse() const { return {d_, -b_, -c_, a_}; }
    GroupElement operator-() const { return {-a_, -b_, -c_, -d_}; }
    bool operator==(const GroupElement &) const = default;

private:
    std::int64_t a_, b_, c_, d_;
};

GroupElement operator*(const GroupElement & g, const GroupElement & h);
std::ostream & operator<<(std::ostream & os, const GroupElement & g);

/// The integral binary quadratic form aX^2 + bXY + cY^2.
struct QForm
{
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    bool operator==(const QForm &) const = default;
};

std::ostream & operator<<(std::ostream & os, const QForm & Q);

// b^2 - 4ac; throws InputRangeError if it does not fit in 64 bits.
std::int64_t discriminant(const QForm & Q);

// Throws DiscriminantError unless D > 0 and D = 0, 1 mod 4.
void require_discriminant(std::int64_t D);
bool is_discriminant(std::int64_t D);
bool is_square(std::int64_t n);

// Q(z, 1) = a z^2 + b z + c.
cplx evaluate(const QForm & Q, const UpperHalfPoint & z);

// Q_z = (a|z|^2 + bx + c) / y. Zero exactly on the geodesic joining the roots of Q.
double geodesic_invariant(const QForm & Q, const UpperHalfPoint & z);

// d/dz Q(z, 1) = 2az + b.
cplx z_derivative(const QForm & Q, const UpperHalfPoint & z);

// (Q o g)(X, Y) = Q(aX + bY, cX + dY). A right action: act(act(Q, g), h) == act(Q, g * h).
QForm act(const QForm & Q, const GroupElement & g);

UpperHalfPoint mobius(const GroupElement & g, const UpperHalfPoint & z);

// j(g, z) = cz + d.
cplx cocycle(const GroupElement & g, const UpperHalfPoint & z);

/// Moves z into the standard fundamental domain |x| <= 1/2, |z| >= 1.
/// Returns g with mobius(g, z) == reduced point.
std::pair<GroupElement, UpperHalfPoint> reduce_to_fundamental_domain(const UpperHalfPoint & z);

/// Every form of discriminant D with |Q(z,1)| <= R, boundary included, ordered by
/// (|a|, a, |b|, b, |c|, c). Forms with a = 0 occur only for square D.
/// Returns an empty list when R^2 < D y^2.
std::vector<QForm> enumerate_bounded(std::int64_t D, const UpperHalfPoint & z, double R);

// Total order used by enumerate_bounded (and by every summation over forms).
bool canonical_less(const QForm & P, const QForm & Q);

} // namespace hypmaass

#endif
