#include "hypmaass/qseries.hpp"

#include "hypmaass/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hypmaass
{

LaurentQSeries::LaurentQSeries(int precision) : valuation_(precision), precision_(precision) {}

LaurentQSeries::LaurentQSeries(int valuation, std::vector<mpz_class> coeffs)
    : valuation_(valuation), precision_(valuation + static_cast<int>(coeffs.size())),
      coeffs_(std::move(coeffs))
{
    normalize();
}

LaurentQSeries::LaurentQSeries(int valuation, std::vector<mpz_class> coeffs, int precision)
    : valuation_(valuation), precision_(precision), coeffs_(std::move(coeffs))
{
    const int known = valuation + static_cast<int>(coeffs_.size());
    if (precision > known) {
        throw std::invalid_argument("LaurentQSeries: precision exceeds the supplied coefficients");
    }
    coeffs_.resize(static_cast<std::size_t>(std::max(0, precision - valuation)));
    normalize();
}

LaurentQSeries LaurentQSeries::constant(const mpz_class & c, int precision)
{
    if (precision <= 0) {
        return LaurentQSeries(precision);
    }
    std::vector<mpz_class> v(static_cast<std::size_t>(precision));
    v[0] = c;
    return {0, std::move(v)};
}

LaurentQSeries LaurentQSeries::monomial(int exponent, int precision)
{
    if (precision <= exponent) {
        return LaurentQSeries(precision);
    }
    std::vector<mpz_class> v(static_cast<std::size_t>(precision - exponent));
    v[0] = 1;
    return {exponent, std::move(v)};
}

void LaurentQSeries::normalize()
{
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) {
        ++lead;
    }
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        valuation_ = precision_;
        return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    valuation_ += static_cast<int>(lead);
}

mpz_class LaurentQSeries::coefficient(int n) const
{
    if (n >= precision_) {
        throw std::out_of_range("coefficient of q^" + std::to_string(n) + " is beyond precision " +
                                std::to_string(precision_));
    }
    if (n < valuation_) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

LaurentQSeries LaurentQSeries::truncated(int precision) const
{
    if (precision >= precision_) {
        return *this;
    }
    if (precision <= valuation_) {
        return LaurentQSeries(precision);
    }
    return {valuation_, std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + (precision - valuation_))};
}

LaurentQSeries LaurentQSeries::shifted(int k) const
{
    LaurentQSeries r = *this;
    r.valuation_ += k;
    r.precision_ += k;
    return r;
}

LaurentQSeries LaurentQSeries::derivative() const
{
    LaurentQSeries r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] *= valuation_ + static_cast<int>(i);
    }
    r.normalize();
    return r;
}

LaurentQSeries LaurentQSeries::divided_exactly(const mpz_class & d) const
{
    if (d == 0) {
        throw std::domain_error("LaurentQSeries: division by zero");
    }
    LaurentQSeries r = *this;
    for (auto & c : r.coeffs_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
            throw std::domain_error("LaurentQSeries: non-integral coefficient in exact division");
        }
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

LaurentQSeries & LaurentQSeries::operator+=(const LaurentQSeries & o)
{
    const int prec = std::min(precision_, o.precision_);
    const int val = std::min(valuation_, o.valuation_);
    if (val >= prec) {
        *this = LaurentQSeries(prec);
        return *this;
    }
    std::vector<mpz_class> v(static_cast<std::size_t>(prec - val));
    for (int n = val; n < prec; ++n) {
        auto & slot = v[static_cast<std::size_t>(n - val)];
        if (n >= valuation_) {
            slot += coeffs_[static_cast<std::size_t>(n - valuation_)];
        }
        if (n >= o.valuation_) {
            slot += o.coeffs_[static_cast<std::size_t>(n - o.valuation_)];
        }
    }
    *this = LaurentQSeries(val, std::move(v));
    return *this;
}

LaurentQSeries operator-(const LaurentQSeries & a)
{
    LaurentQSeries r = a;
    for (auto & c : r.coeffs_) {
        c = -c;
    }
    return r;
}

LaurentQSeries & LaurentQSeries::operator-=(const LaurentQSeries & o)
{
    return *this += -o;
}

LaurentQSeries operator*(const LaurentQSeries & a, const LaurentQSeries & b)
{
    const int prec = std::min(a.precision_ + b.valuation_, b.precision_ + a.valuation_);
    if (a.is_zero() || b.is_zero()) {
        return LaurentQSeries(prec);
    }
    const int val = a.valuation_ + b.valuation_;
    const int len = prec - val;
    std::vector<mpz_class> v(static_cast<std::size_t>(len));
    for (int i = 0; i < len && i < static_cast<int>(a.coeffs_.size()); ++i) {
        const auto & ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai == 0) {
            continue;
        }
        for (int j = 0; i + j < len && j < static_cast<int>(b.coeffs_.size()); ++j) {
            mpz_addmul(v[static_cast<std::size_t>(i + j)].get_mpz_t(), ai.get_mpz_t(),
                       b.coeffs_[static_cast<std::size_t>(j)].get_mpz_t());
        }
    }
    return {val, std::move(v)};
}

LaurentQSeries operator*(const mpz_class & s, const LaurentQSeries & a)
{
    LaurentQSeries r = a;
    for (auto & c : r.coeffs_) {
        c *= s;
    }
    r.normalize();
    return r;
}

LaurentQSeries operator/(const LaurentQSeries & a, const LaurentQSeries & b)
{
    if (b.is_zero()) {
        throw std::domain_error("LaurentQSeries: division by a series with no known nonzero term");
    }
    const int val = a.valuation_ - b.valuation_;
    if (a.is_zero()) {
        return LaurentQSeries(a.precision_ - b.valuation_);
    }
    const int len = std::min(a.precision_ - a.valuation_, b.precision_ - b.valuation_);
    const mpz_class & lead = b.coeffs_.front();
    std::vector<mpz_class> v(static_cast<std::size_t>(len));
    mpz_class acc;
    for (int n = 0; n < len; ++n) {
        acc = a.coeffs_[static_cast<std::size_t>(n)];
        for (int i = 1; i <= n && i < static_cast<int>(b.coeffs_.size()); ++i) {
            mpz_submul(acc.get_mpz_t(), b.coeffs_[static_cast<std::size_t>(i)].get_mpz_t(),
                       v[static_cast<std::size_t>(n - i)].get_mpz_t());
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t())) {
            throw std::domain_error("LaurentQSeries: non-integral coefficient in series division");
        }
        mpz_divexact(v[static_cast<std::size_t>(n)].get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
    }
    return {val, std::move(v)};
}

bool LaurentQSeries::operator==(const LaurentQSeries & o) const
{
    return precision_ == o.precision_ && valuation_ == o.valuation_ && coeffs_ == o.coeffs_;
}

std::ostream & operator<<(std::ostream & os, const LaurentQSeries & s)
{
    for (int n = s.valuation(); n < s.precision(); ++n) {
        os << n << ":" << s.coefficient(n).get_str() << "\n";
    }
    return os;
}

LaurentQSeries eisenstein(int weight, int precision)
{
    long factor = 0;
    switch (weight) {
    case 2: factor = -24; break;
    case 4: factor = 240; break;
    case 6: factor = -504; break;
    default: throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
    }
    if (precision < 1) {
        throw std::invalid_argument("eisenstein: precision must be at least 1");
    }
    const auto N = static_cast<std::size_t>(precision);
    std::vector<mpz_class> sigma(N);
    mpz_class power;
    for (std::size_t d = 1; d < N; ++d) {
        mpz_ui_pow_ui(power.get_mpz_t(), d, static_cast<unsigned long>(weight - 1));
        for (std::size_t m = d; m < N; m += d) {
            sigma[m] += power;
        }
    }
    std::vector<mpz_class> c(N);
    c[0] = 1;
    for (std::size_t n = 1; n < N; ++n) {
        c[n] = factor * sigma[n];
    }
    return {0, std::move(c)};
}

LaurentQSeries delta(int precision)
{
    const LaurentQSeries e4 = eisenstein(4, precision);
    const LaurentQSeries e6 = eisenstein(6, precision);
    return (e4 * e4 * e4 - e6 * e6).divided_exactly(1728);
}

LaurentQSeries klein_j(int precision)
{
    // Dividing by Delta = q(1 - 24q + ...) costs two orders of precision.
    const int work = precision + 2;
    const LaurentQSeries e4 = eisenstein(4, work);
    return ((e4 * e4 * e4) / delta(work)).truncated(precision);
}

std::vector<LaurentQSeries> faber_family(int nmax, int precision)
{
    if (nmax < 0 || precision < 1) {
        throw std::invalid_argument("faber_family: need nmax >= 0 and precision >= 1");
    }
    // j_1 * j_{m-1} loses one order per step of the recursion.
    const int work = precision + nmax;
    std::vector<LaurentQSeries> js;
    js.reserve(static_cast<std::size_t>(nmax) + 1);
    js.push_back(LaurentQSeries::constant(1, work));
    if (nmax >= 1) {
        js.push_back(klein_j(work + 1) - LaurentQSeries::constant(744, work + 1));
    }
    for (int m = 2; m <= nmax; ++m) {
        LaurentQSeries next = js[1] * js[static_cast<std::size_t>(m - 1)];
        // Kill the principal part below q^{-m} and the constant term.
        for (int e = -(m - 1); e <= 0; ++e) {
            const mpz_class c = next.coefficient(e);
            if (c != 0) {
                next -= c * js[static_cast<std::size_t>(-e)];
            }
        }
        js.push_back(std::move(next));
    }
    for (auto & s : js) {
        s = s.truncated(precision);
        if (s.precision() != precision) {
            throw std::logic_error("faber_family: precision bookkeeping failed");
        }
    }
    return js;
}

LaurentQSeries faber(int n, int precision)
{
    return faber_family(n, precision).back();
}

QEvaluation evaluate_q(const LaurentQSeries & s, const UpperHalfPoint & z, double tol)
{
    QEvaluation out;
    if (s.is_zero()) {
        return out;
    }
    const double two_pi = 2.0 * std::numbers::pi;
    const double log_q = -two_pi * z.y();
    const int first = s.valuation();
    const int last = s.precision() - 1;

    // log|c_n| (or -inf) for the terms, then the sum from the smallest terms up.
    std::vector<double> log_c(static_cast<std::size_t>(last - first + 1),
                              -std::numeric_limits<double>::infinity());
    cplx sum = 0.0;
    for (int n = last; n >= first; --n) {
        const mpz_class c = s.coefficient(n);
        if (c == 0) {
            continue;
        }
        long e2 = 0;
        const double mant = mpz_get_d_2exp(&e2, c.get_mpz_t());
        const double log_abs = std::log(std::abs(mant)) + static_cast<double>(e2) * std::numbers::ln2;
        log_c[static_cast<std::size_t>(n - first)] = log_abs;
        const double mag = std::exp(log_abs + static_cast<double>(n) * log_q);
        const double phase = two_pi * std::fmod(static_cast<double>(n) * z.x(), 1.0);
        sum += std::polar(mant < 0 ? -mag : mag, phase);
    }
    out.value = sum;

    // Geometric model for the unknown tail from the last few known coefficients.
    const int window = std::min(8, last - first + 1);
    double growth = 0.0;
    bool have_ratio = false;
    for (int n = last - window + 2; n <= last; ++n) {
        const double l1 = log_c[static_cast<std::size_t>(n - first)];
        const double l0 = log_c[static_cast<std::size_t>(n - 1 - first)];
        if (std::isfinite(l1) && std::isfinite(l0)) {
            growth = have_ratio ? std::max(growth, l1 - l0) : l1 - l0;
            have_ratio = true;
        }
    }
    const double log_ratio = (have_ratio ? std::max(growth, 0.0) : 0.0) + log_q;
    double base = 0.0;
    bool any = false;
    for (int n = last - window + 1; n <= last; ++n) {
        const double l = log_c[static_cast<std::size_t>(n - first)];
        if (std::isfinite(l)) {
            any = true;
            base = std::max(base, std::exp(l + n * log_q + (last - n) * log_ratio));
        }
    }
    if (any) {
        if (log_ratio >= 0.0) {
            out.tail_bound = std::numeric_limits<double>::infinity();
        } else {
            const double r = std::exp(log_ratio);
            out.tail_bound = base * r / (1.0 - r);
        }
    }
    if (out.tail_bound > tol) {
        throw ConvergenceError("evaluate_q: tail estimate " + std::to_string(out.tail_bound) +
                               " exceeds tolerance " + std::to_string(tol) + " at y = " +
                               std::to_string(z.y()) + " with precision " + std::to_string(s.precision()));
    }
    return out;
}

const LaurentQSeries & cached_e2()
{
    static const LaurentQSeries s = eisenstein(2, kDefaultQPrecision);
    return s;
}

const LaurentQSeries & cached_delta()
{
    static const LaurentQSeries s = delta(kDefaultQPrecision);
    return s;
}

const LaurentQSeries & cached_j()
{
    static const LaurentQSeries s = klein_j(kDefaultQPrecision);
    return s;
}

const LaurentQSeries & cached_j_derivative()
{
    static const LaurentQSeries s = cached_j().derivative();
    return s;
}

cplx evaluate_j(const UpperHalfPoint & z)
{
    return evaluate_q(cached_j(), reduce_to_fundamental_domain(z).second).value;
}

cplx evaluate_faber(int n, const UpperHalfPoint & z)
{
    if (n < 0) {
        throw std::invalid_argument("evaluate_faber: n must be nonnegative");
    }
    if (n == 0) {
        return 1.0;
    }
    cplx sum = 0.0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        const int a = n / d;
        for (int b = 0; b < d; ++b) {
            const UpperHalfPoint w((a * z.x() + b) / d, a * z.y() / d);
            sum += evaluate_j(w) - 744.0;
        }
    }
    return sum;
}

} // namespace hypmaass
