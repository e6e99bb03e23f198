#pragma once

#include "fibsum/rat.hpp"
#include "fibsum/sequence.hpp"

namespace fibsum {

// Parameters of the weighted quadratic sum
//   sum_{k=0}^{n} x^k k^m G_{a+bk} H_{c+dk}
// with x != 0, m in 0..5 and n >= 0.
struct QuadSumSpec {
    long long a = 0;
    long long b = 0;
    long long c = 0;
    long long d = 0;
    int m = 0;
    Rat x = Rat(1);
    long long n = 0;
    Seed gseed = FIB_SEED;
    Seed hseed = FIB_SEED;
};

// Denominator polynomials of the closed forms:
//   delta1 = 1 - L_{b+d} x + (-1)^{b+d} x^2
//   delta2 = 1 - (-1)^d L_{b-d} x + (-1)^{b-d} x^2
Rat delta1(long long b, long long d, const Rat& x);
Rat delta2(long long b, long long d, const Rat& x);

// P_2(v,w) = sum_{k=0}^{v} C(v,k) (-1)^((b+d+1)k) x^k G_{a+bw-bk} H_{c+dw-dk}.
// shift = -1 / +1 gives the variants with (a,c) replaced by (a-1,c-1) /
// (a+1,c+1); shift = 0 is the plain polynomial.
Rat p2(long long v, long long w, const QuadSumSpec& spec, int shift = 0);

// Q_2(v,w) = (1/5) [ (2/delta1^v + 3/delta2^v) P_2(v,w)
//                    + (1/delta1^v - 1/delta2^v) (P_2^-(v,w) + P_2^+(v,w)) ].
// Throws VanishingDenominator when the required delta is zero.
Rat q2(long long v, long long w, const QuadSumSpec& spec);

// The m-indexed closed form built from Q_2 values (m = 0..5). Exact; throws
// VanishingDenominator when delta1 or delta2 vanishes at (b, d, x).
Rat quad_sum_closed(const QuadSumSpec& spec);

// Oracle: direct term-by-term summation. Works at singular x as well.
Rat quad_sum_brute(const QuadSumSpec& spec);

// Structured form of Q_2(v,w) available when d = b or d = -b:
//   d =  b: Q_2 = P_2/delta1^v + (1/5)(1/delta2^v - 1/delta1^v) (-1)^{bw}
//                 (1-(-1)^b x)^v (3 G_a H_c - G_{a-1}H_{c-1} - G_{a+1}H_{c+1})
//   d = -b: Q_2 = P_2/delta2^v + (1/5)(1/delta1^v - 1/delta2^v)
//                 (1-x)^v (2 G_a H_c + G_{a-1}H_{c-1} + G_{a+1}H_{c+1})
// Must agree with q2 wherever both are defined. Throws VanishingDenominator
// at singular x and std::invalid_argument when d != +-b.
Rat quadspec_closed(long long v, long long w, const QuadSumSpec& spec);

// Explicit limit values for the two singular families with known closed
// forms (both require m = 0):
//   b = d = 1, x = -1:  sum (-1)^k G_{p+k} H_{q+k}  (alternating product sum)
//   b = 1, d = -1, x = 1:  sum G_{p+k} H_{q-k}      (convolution-style sum)
// with p = a, q = c. Every other singular combination throws
// UnsupportedLimit.
Rat quad_special(const QuadSumSpec& spec);

// Dispatcher: quad_sum_closed when delta1 * delta2 != 0, otherwise
// quad_special (which may throw UnsupportedLimit).
Rat quad_sum_eval(const QuadSumSpec& spec);

// Independent evaluation of sum_{k=0}^{n} x^k F_{a+bk} F_{c+dk} through the
// Lucas-number forms
//   Z1 = (1/(5 delta1)) { x^{n+1} [ (-1)^{b+d} L_{a+c+(b+d)n} x
//          - L_{a+c+(b+d)(n+1)} ] - [ (-1)^{b+d} L_{a+c-(b+d)} x - L_{a+c} ] }
//   Z2 = -(1/(5 delta2)) (-1)^c { x^{n+1} (-1)^{d(n+1)} [ (-1)^b
//          L_{a-c+(b-d)n} x - L_{a-c+(b-d)(n+1)} ]
//          - [ (-1)^b L_{a-c-(b-d)} x - L_{a-c} ] }
// returning Z1 + Z2. Both boundary brackets carry the same factor x as the
// leading brackets; this falls straight out of the geometric-series
// telescoping in the derivation. A derivation path separate from
// quad_sum_closed, used as a cross-check for Fibonacci seeds.
Rat z_sum_ff(long long a, long long b, long long c, long long d, const Rat& x,
             long long n);

} // namespace fibsum
