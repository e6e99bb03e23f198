#pragma once

#include "fibsum/cubic_sum.hpp"
#include "fibsum/quad_sum.hpp"
#include "fibsum/rat.hpp"
#include "fibsum/sequence.hpp"

namespace fibsum {

// Index direction of the two-sequence generating-function forms:
//   PlusPlus   sum x^k G_{p+k} H_{q+k}
//   PlusMinus  sum x^k G_{p+k} H_{q-k}
enum class GfDirection { PlusPlus, PlusMinus };

// Advisory convergence decision for sum x^k G_{a+bk} H_{c+dk}: true iff
// |x| * phi^(|b|+|d|) < 1. The irrational bound is enclosed in a 64-digit
// rational interval; inputs whose product lies within a two-sided relative
// guard band of 10^-15 around 1 throw Indeterminate.
bool converges(long long b, long long d, const Rat& x);

// Same decision for a summand of total growth order phi^(growth * k);
// quadratic sums have growth = |b| + |d|, the cubic variants 3 or 6.
bool converges_scale(long long growth, const Rat& x);

// Exact value of the infinite series  sum_{k>=0} x^k k^m G_{a+bk} H_{c+dk}
// (the generating function of the product sequence when m = 0). The n field
// of the spec is ignored. Throws DivergentSeries outside the convergence
// radius (including indeterminate boundary cases) and VanishingDenominator
// when a delta factor is zero.
Rat quad_series(const QuadSumSpec& spec);

// The two-term rational forms of the unweighted series with b = 1, d = +-1:
//   PlusPlus:  1/(1-3x+x^2) (G_p H_q - x G_{p-1}H_{q-1})
//              - x/((1+x)(1-3x+x^2)) (3G_pH_q - G_{p-1}H_{q-1} - G_{p+1}H_{q+1})
//   PlusMinus: 1/(1+3x+x^2) (G_p H_q - x G_{p-1}H_{q+1})
//              + x/((1-x)(1+3x+x^2)) (2G_pH_q + G_{p-1}H_{q-1} + G_{p+1}H_{q+1})
// Must equal quad_series on the overlap domain.
Rat quad_gf_forms(long long p, long long q, GfDirection direction, const Rat& x,
                  const Seed& gseed, const Seed& hseed);

// Exact value of the infinite cubic series for the spec's variant (the n
// field is ignored), e.g. for PlusPlusPlus:
//   -1/((1+x-x^2)(1-4x-x^2)) [ x^2(x+3) G_{p-1}H_{q-1}K_{r-1}
//     + (3x-1) G_pH_qK_r + x^2 G_{p-2}H_{q-2}K_{r-2} - x G_{p+1}H_{q+1}K_{r+1} ]
// Convergence requires |x| < phi^-3 (single-step variants) or phi^-6
// (DoubleStep).
Rat cubic_gf(const CubicSumSpec& spec);

} // namespace fibsum
