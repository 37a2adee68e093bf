#ifndef HYPMAASS_COMPENSATED_HPP
#define HYPMAASS_COMPENSATED_HPP

#include <cmath>
#include <complex>

namespace hypmaass
{

// Neumaier's variant of Kahan summation.
class CompensatedSum
{
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexCompensatedSum
{
public:
    void add(std::complex<double> v)
    {
        re_.add(v.real());
        im_.add(v.imag());
    }

    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

} // namespace hypmaass

#endif
