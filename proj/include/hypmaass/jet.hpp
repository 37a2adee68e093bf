#ifndef HYPMAASS_JET_HPP
#define HYPMAASS_JET_HPP

#include <array>
#include <complex>
#include <cstddef>

namespace hypmaass
{

/**
 * Second-order forward-mode jet in three real variables.
 *
 * Holds a value, its gradient and its Hessian. The Hessian is stored as the upper
 * triangle, so symmetry holds by construction.
 */
template <typename T>
class Jet2
{
public:
    using scalar = std::complex<T>;

    Jet2() = default;
    Jet2(scalar v) : value_(v) {} // NOLINT: implicit constants are convenient in formulas

    // The coordinate function w_i evaluated at `at`.
    static Jet2 variable(std::size_t i, T at)
    {
        Jet2 j{scalar(at)};
        j.grad_[i] = 1;
        return j;
    }

    const scalar & value() const { return value_; }
    const scalar & d(std::size_t i) const { return grad_[i]; }
    const scalar & dd(std::size_t i, std::size_t j) const { return hess_[index(i, j)]; }

    Jet2 & operator+=(const Jet2 & o)
    {
        value_ += o.value_;
        for (std::size_t i = 0; i < 3; ++i) grad_[i] += o.grad_[i];
        for (std::size_t i = 0; i < 6; ++i) hess_[i] += o.hess_[i];
        return *this;
    }

    Jet2 & operator-=(const Jet2 & o)
    {
        value_ -= o.value_;
        for (std::size_t i = 0; i < 3; ++i) grad_[i] -= o.grad_[i];
        for (std::size_t i = 0; i < 6; ++i) hess_[i] -= o.hess_[i];
        return *this;
    }

    Jet2 & operator*=(const scalar & s)
    {
        value_ *= s;
        for (auto & g : grad_) g *= s;
        for (auto & h : hess_) h *= s;
        return *this;
    }

    friend Jet2 operator+(Jet2 a, const Jet2 & b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2 & b) { return a -= b; }
    friend Jet2 operator-(Jet2 a) { return a *= scalar(-1); }
    friend Jet2 operator*(Jet2 a, const scalar & s) { return a *= s; }
    friend Jet2 operator*(const scalar & s, Jet2 a) { return a *= s; }
    friend Jet2 operator*(Jet2 a, T s) { return a *= scalar(s); }
    friend Jet2 operator*(T s, Jet2 a) { return a *= scalar(s); }

    friend Jet2 operator*(const Jet2 & a, const Jet2 & b)
    {
        Jet2 r(a.value_ * b.value_);
        for (std::size_t i = 0; i < 3; ++i) {
            r.grad_[i] = a.grad_[i] * b.value_ + a.value_ * b.grad_[i];
        }
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i; j < 3; ++j) {
                r.hess_[index(i, j)] = a.hess_[index(i, j)] * b.value_ + a.value_ * b.hess_[index(i, j)] +
                                       a.grad_[i] * b.grad_[j] + a.grad_[j] * b.grad_[i];
            }
        }
        return r;
    }

    friend Jet2 operator/(const Jet2 & a, const Jet2 & b) { return a * b.apply_inverse(); }

    // phi(u) from phi(u0), phi'(u0), phi''(u0).
    Jet2 compose(const scalar & f0, const scalar & f1, const scalar & f2) const
    {
        Jet2 r(f0);
        for (std::size_t i = 0; i < 3; ++i) {
            r.grad_[i] = f1 * grad_[i];
        }
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i; j < 3; ++j) {
                r.hess_[index(i, j)] = f1 * hess_[index(i, j)] + f2 * grad_[i] * grad_[j];
            }
        }
        return r;
    }

    // u^s on the principal branch.
    Jet2 pow(T s) const
    {
        const scalar f0 = std::pow(value_, s);
        const scalar f1 = s * f0 / value_;
        const scalar f2 = (s - 1) * f1 / value_;
        return compose(f0, f1, f2);
    }

    // u^n by repeated multiplication of the value; n >= 0.
    Jet2 ipow(int n) const
    {
        if (n == 0) {
            return Jet2(scalar(1));
        }
        scalar f0 = 1;
        for (int i = 0; i < n - 1; ++i) f0 *= value_;
        const scalar pn1 = f0; // u^{n-1}
        f0 *= value_;
        const scalar f1 = static_cast<T>(n) * pn1;
        const scalar f2 = n >= 2 ? static_cast<T>(n) * static_cast<T>(n - 1) * pn1 / value_ : scalar(0);
        return compose(f0, f1, f2);
    }

private:
    static constexpr std::size_t index(std::size_t i, std::size_t j)
    {
        if (i > j) {
            const std::size_t t = i;
            i = j;
            j = t;
        }
        // (0,0) (0,1) (0,2) (1,1) (1,2) (2,2)
        return i == 0 ? j : (i == 1 ? 2 + j : 5);
    }

    Jet2 apply_inverse() const
    {
        const scalar f0 = scalar(1) / value_;
        const scalar f1 = -f0 * f0;
        const scalar f2 = T(-2) * f1 * f0;
        return compose(f0, f1, f2);
    }

    scalar value_{};
    std::array<scalar, 3> grad_{};
    std::array<scalar, 6> hess_{};
};

} // namespace hypmaass

#endif
