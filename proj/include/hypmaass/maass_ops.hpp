#ifndef HYPMAASS_MAASS_OPS_HPP
#define HYPMAASS_MAASS_OPS_HPP

#include "hypmaass/qforms.hpp"

#include <cstdint>
#include <functional>

namespace hypmaass
{

// Deterministic, re-entrant evaluator H -> C.
using SmoothFunction = std::function<cplx(const UpperHalfPoint &)>;

/// A weight in (1/2)Z, stored as twice its value.
class Weight
{
public:
    static Weight integral(int k) { return Weight(2 * k); }
    // k + 1/2
    static Weight half_integral(int k) { return Weight(2 * k + 1); }
    static Weight from_twice(int twice) { return Weight(twice); }

    int twice() const { return twice_; }
    double value() const { return twice_ / 2.0; }
    bool is_integral() const { return twice_ % 2 == 0; }

    // 2 - kappa, the dual weight of the xi operator.
    Weight dual() const { return Weight(4 - twice_); }

private:
    explicit Weight(int twice) : twice_(twice) {}
    int twice_;
};

// Extended Kronecker symbol (c/d).
int kronecker(std::int64_t c, std::int64_t d);

// 1 if d = 1 mod 4, i if d = 3 mod 4 (residues taken in {0,1,2,3}); even d throws.
cplx eps(std::int64_t d);

/// (F|_kappa g)(z).
///
/// Integral kappa: j(g,z)^{-kappa} F(gz). Half-integral kappa needs c = 0 mod 4 and gives
/// (c/d) eps_d^{2 kappa} j(g,z)^{-kappa} F(gz), with w^{-kappa} = exp(-kappa Log w) on the
/// principal branch. g is first replaced by -g when d < 0, so the representative used
/// always has d > 0.
cplx slash(Weight kappa, const GroupElement & g, const SmoothFunction & F, const UpperHalfPoint & z);

// Step used when h <= 0 is passed: 1e-3 max(1, y), capped at y/8.
double default_first_step(const UpperHalfPoint & z);
// 5e-3 max(1, y), capped at y/8.
double default_second_step(const UpperHalfPoint & z);

/// dF/dzbar = (F_x + i F_y)/2 from fourth-order central differences, Richardson-combined
/// across h and h/2. Throws RoughFunctionError when the two step sizes disagree.
cplx wirtinger_dzbar(const SmoothFunction & F, const UpperHalfPoint & z, double h = 0.0);

// xi_kappa F = 2i y^kappa conj(dF/dzbar).
cplx xi(Weight kappa, const SmoothFunction & F, const UpperHalfPoint & z, double h = 0.0);

// -y^2 (F_xx + F_yy) + i kappa y (F_x + i F_y).
cplx laplacian(Weight kappa, const SmoothFunction & F, const UpperHalfPoint & z, double h = 0.0);

} // namespace hypmaass

#endif
