#pragma once

#include "fibsum/rat.hpp"
#include "fibsum/sequence.hpp"

namespace fibsum {

// Index pattern of the cubic summand:
//   PlusPlusPlus   G_{p+k}  H_{q+k}  K_{r+k}
//   PlusPlusMinus  G_{p+k}  H_{q+k}  K_{r-k}
//   PlusMinusMinus G_{p+k}  H_{q-k}  K_{r-k}
//   DoubleStep     G_{p+2k} H_{q+2k} K_{r+2k}
enum class CubicVariant { PlusPlusPlus, PlusPlusMinus, PlusMinusMinus, DoubleStep };

// Parameters of the cubic sum  sum_{k=0}^{n} x^k G H K  with the variant's
// index pattern, x != 0 and n >= 0.
struct CubicSumSpec {
    long long p = 0;
    long long q = 0;
    long long r = 0;
    CubicVariant variant = CubicVariant::PlusPlusPlus;
    Rat x = Rat(1);
    long long n = 0;
    Seed gseed = FIB_SEED;
    Seed hseed = FIB_SEED;
    Seed kseed = FIB_SEED;
};

// The two factors of the variant's denominator polynomial:
//   PlusPlusPlus / PlusMinusMinus: (1 + x - x^2)(1 - 4x - x^2)
//   PlusPlusMinus:                 (1 - x - x^2)(1 + 4x - x^2)
//   DoubleStep:                    (1 - 3x + x^2)(1 - 18x + x^2)
// Every factor has irrational roots, so the product cannot vanish at a
// rational x; the closed form still guards it defensively.
std::pair<Rat, Rat> cubic_denominator_factors(CubicVariant variant, const Rat& x);

// Exact closed-form value. Throws VanishingDenominator if a factor is zero
// (impossible for rational x, kept as a guard).
Rat cubic_sum_closed(const CubicSumSpec& spec);

// Oracle: direct term-by-term summation.
Rat cubic_sum_brute(const CubicSumSpec& spec);

} // namespace fibsum
