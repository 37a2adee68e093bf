#ifndef HYPMAASS_QSERIES_HPP
#define HYPMAASS_QSERIES_HPP

#include "hypmaass/qforms.hpp"

#include <gmpxx.h>

#include <iosfwd>
#include <limits>
#include <vector>

namespace hypmaass
{

// Coefficient count used when no precision is requested explicitly.
inline constexpr int kDefaultQPrecision = 64;

/**
 * Truncated Laurent series  sum_{n >= valuation} c_n q^n + O(q^precision)  with exact
 * integer coefficients.
 *
 * Every coefficient below `precision` is known exactly. Arithmetic propagates the
 * smallest precision its operands justify and never pads with zeros. Division is
 * exact: a non-integral quotient coefficient throws.
 */
class LaurentQSeries
{
public:
    // The zero series O(q^precision).
    explicit LaurentQSeries(int precision = 0);

    // Coefficients of q^valuation, q^(valuation+1), ...; precision = valuation + coeffs.size().
    LaurentQSeries(int valuation, std::vector<mpz_class> coeffs);
    LaurentQSeries(int valuation, std::vector<mpz_class> coeffs, int precision);

    static LaurentQSeries constant(const mpz_class & c, int precision);
    static LaurentQSeries monomial(int exponent, int precision);

    bool is_zero() const { return coeffs_.empty(); }
    // Lowest exponent with a nonzero coefficient; equals precision() for the zero series.
    int valuation() const { return valuation_; }
    int precision() const { return precision_; }

    // Exact coefficient of q^n for n < precision().
    mpz_class coefficient(int n) const;

    LaurentQSeries truncated(int precision) const;
    LaurentQSeries shifted(int k) const; // times q^k

    // q d/dq, i.e. (1/2 pi i) d/dz.
    LaurentQSeries derivative() const;

    LaurentQSeries divided_exactly(const mpz_class & d) const;

    LaurentQSeries & operator+=(const LaurentQSeries & o);
    LaurentQSeries & operator-=(const LaurentQSeries & o);

    friend LaurentQSeries operator+(LaurentQSeries a, const LaurentQSeries & b) { return a += b; }
    friend LaurentQSeries operator-(LaurentQSeries a, const LaurentQSeries & b) { return a -= b; }
    friend LaurentQSeries operator-(const LaurentQSeries & a);
    friend LaurentQSeries operator*(const LaurentQSeries & a, const LaurentQSeries & b);
    friend LaurentQSeries operator*(const mpz_class & s, const LaurentQSeries & a);
    friend LaurentQSeries operator/(const LaurentQSeries & a, const LaurentQSeries & b);

    // Same precision and identical coefficients.
    bool operator==(const LaurentQSeries & o) const;

private:
    void normalize();

    int valuation_ = 0;
    int precision_ = 0;
    std::vector<mpz_class> coeffs_; // c_valuation ... c_{precision-1}
};

// One "n:coefficient" line per known coefficient, starting at the valuation.
std::ostream & operator<<(std::ostream & os, const LaurentQSeries & s);

// Normalized Eisenstein series of weight 2, 4 or 6: 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
LaurentQSeries eisenstein(int weight, int precision);
LaurentQSeries delta(int precision);
LaurentQSeries klein_j(int precision);

// j_n: the modular function q^{-n} + O(q). j_0 = 1, j_1 = j - 744.
LaurentQSeries faber(int n, int precision);
// j_0 ... j_nmax in one pass.
std::vector<LaurentQSeries> faber_family(int nmax, int precision);

struct QEvaluation
{
    cplx value;
    double tail_bound = 0.0;
};

/// Sums the known terms at q = e^{2 pi i z}. The tail beyond the precision is estimated
/// geometrically from the growth of the last coefficients. Throws ConvergenceError when
/// that estimate exceeds `tol`.
QEvaluation evaluate_q(const LaurentQSeries & s, const UpperHalfPoint & z,
                       double tol = std::numeric_limits<double>::infinity());

// Shared immutable series at the default precision, built once.
const LaurentQSeries & cached_e2();
const LaurentQSeries & cached_delta();
const LaurentQSeries & cached_j();
const LaurentQSeries & cached_j_derivative(); // q dj/dq

/// j(z), evaluated after reducing z to the fundamental domain.
cplx evaluate_j(const UpperHalfPoint & z);

/// j_n(z) through the Hecke relation j_n = sum_{ad=n, 0<=b<d} j_1((az+b)/d).
/// Independent of the Faber recursion and well conditioned for every z.
cplx evaluate_faber(int n, const UpperHalfPoint & z);

} // namespace hypmaass

#endif
