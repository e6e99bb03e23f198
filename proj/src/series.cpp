#include "fibsum/series.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

// R with R <= sqrt(5) * 10^64 < R + 1.
const BigInt& sqrt5_floor_scaled() {
    static const BigInt r = boost::multiprecision::sqrt(
        BigInt(5) * boost::multiprecision::pow(BigInt(10), 128));
    return r;
}

const BigInt& pow10_64() {
    static const BigInt p = boost::multiprecision::pow(BigInt(10), 64);
    return p;
}

const Rat& band_eps() {
    static const Rat eps =
        Rat(1) / Rat(boost::multiprecision::pow(BigInt(10), 15));
    return eps;
}

// Coefficient rows of the weighted series: the m-th series value is
// sum over (coeff, v) of coeff * x^(v-1) * Q_2(v, v-1).
const std::vector<std::pair<long long, long long>>& series_entries(int m) {
    static const std::vector<std::vector<std::pair<long long, long long>>> table = {
        {{1, 1}},
        {{1, 2}},
        {{1, 2}, {2, 3}},
        {{1, 2}, {6, 3}, {6, 4}},
        {{1, 2}, {14, 3}, {36, 4}, {24, 5}},
        {{1, 2}, {30, 3}, {150, 4}, {240, 5}, {120, 6}},
    };
    if (m < 0 || m > 5)
        throw std::invalid_argument("weight power m must be in 0..5");
    return table[static_cast<std::size_t>(m)];
}

} // namespace

bool converges_scale(long long growth, const Rat& x) {
    if (growth < 0)
        throw std::invalid_argument("growth order must be >= 0");
    if (x == 0)
        return true;
    // t = |x| phi^s with phi^s = (L_s + F_s sqrt(5)) / 2 and s >= 0, so the
    // 64-digit enclosure of sqrt(5) yields an exact rational interval for t.
    const Rat ax = abs(x);
    const FLPair fl = fl_fast(growth);
    const Rat lo = ax * (Rat(fl.l) + Rat(fl.f) * Rat(sqrt5_floor_scaled()) / Rat(pow10_64())) / 2;
    const Rat hi = ax * (Rat(fl.l) + Rat(fl.f) * Rat(sqrt5_floor_scaled() + 1) / Rat(pow10_64())) / 2;
    const Rat& eps = band_eps();
    if (hi < 1 - eps)
        return true;
    if (lo > 1 + eps)
        return false;
    throw Indeterminate();
}

bool converges(long long b, long long d, const Rat& x) {
    return converges_scale(std::llabs(b) + std::llabs(d), x);
}

Rat quad_series(const QuadSumSpec& spec) {
    try {
        if (!converges(spec.b, spec.d, spec.x))
            throw DivergentSeries();
    } catch (const Indeterminate&) {
        throw DivergentSeries();
    }
    Rat total(0);
    for (const auto& [coeff, v] : series_entries(spec.m))
        total += coeff * rat_pow(spec.x, v - 1) * q2(v, v - 1, spec);
    return total;
}

Rat quad_gf_forms(long long p, long long q, GfDirection direction, const Rat& x,
                  const Seed& gseed, const Seed& hseed) {
    try {
        if (!converges_scale(2, x))
            throw DivergentSeries();
    } catch (const Indeterminate&) {
        throw DivergentSeries();
    }
    Sequence g(gseed), h(hseed);
    const BigInt center = g.at(p) * h.at(q);
    const BigInt lower = g.at(p - 1) * h.at(q - 1);
    const BigInt upper = g.at(p + 1) * h.at(q + 1);
    if (direction == GfDirection::PlusPlus) {
        const Rat quadratic = 1 - 3 * x + x * x;
        const Rat linear = 1 + x;
        if (quadratic == 0)
            throw VanishingDenominator(1);
        if (linear == 0)
            throw VanishingDenominator(2);
        const BigInt cross = g.at(p - 1) * h.at(q - 1);
        const BigInt bracket = 3 * center - lower - upper;
        return (Rat(center) - x * Rat(cross)) / quadratic -
               x * Rat(bracket) / (linear * quadratic);
    }
    const Rat quadratic = 1 + 3 * x + x * x;
    const Rat linear = 1 - x;
    if (quadratic == 0)
        throw VanishingDenominator(1);
    if (linear == 0)
        throw VanishingDenominator(2);
    const BigInt cross = g.at(p - 1) * h.at(q + 1);
    const BigInt bracket = 2 * center + lower + upper;
    return (Rat(center) - x * Rat(cross)) / quadratic +
           x * Rat(bracket) / (linear * quadratic);
}

Rat cubic_gf(const CubicSumSpec& spec) {
    const long long growth = spec.variant == CubicVariant::DoubleStep ? 6 : 3;
    try {
        if (!converges_scale(growth, spec.x))
            throw DivergentSeries();
    } catch (const Indeterminate&) {
        throw DivergentSeries();
    }
    const auto [f1, f2] = cubic_denominator_factors(spec.variant, spec.x);
    if (f1 == 0)
        throw VanishingDenominator(1);
    if (f2 == 0)
        throw VanishingDenominator(2);
    Sequence g(spec.gseed), h(spec.hseed), kk(spec.kseed);
    // Displacement multipliers and bracket constants per variant, matching
    // the finite closed forms' boundary part.
    long long eg = 1, eh = 1, ek = 1, A = 3, B = 3;
    switch (spec.variant) {
    case CubicVariant::PlusPlusPlus:
        break;
    case CubicVariant::PlusPlusMinus:
        ek = -1;
        A = -3;
        B = -3;
        break;
    case CubicVariant::PlusMinusMinus:
        eh = -1;
        ek = -1;
        break;
    case CubicVariant::DoubleStep:
        eg = eh = ek = 2;
        A = -21;
        B = 21;
        break;
    }
    const auto term = [&](long long j) {
        const BigInt prod = g.at(spec.p + eg * j) * h.at(spec.q + eh * j) *
                            kk.at(spec.r + ek * j);
        return Rat(prod);
    };
    const Rat& x = spec.x;
    const Rat xx = x * x;
    const Rat bracket = xx * (x + A) * term(-1) + (B * x - 1) * term(0) +
                        xx * term(-2) - x * term(1);
    return -bracket / (f1 * f2);
}

} // namespace fibsum
