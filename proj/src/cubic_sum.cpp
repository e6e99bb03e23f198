#include "fibsum/cubic_sum.hpp"

#include <stdexcept>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

// Per-sequence displacement multipliers: the summand term at offset j is
// G_{p + eg*j} H_{q + eh*j} K_{r + ek*j}.
struct Pattern {
    long long eg, eh, ek;
    // Closed-form shape constants: the bracket coefficients are x^2 (x + A),
    // (B x - 1), x^2 and -x on the displaced products.
    long long A, B;
};

Pattern pattern_of(CubicVariant variant) {
    switch (variant) {
    case CubicVariant::PlusPlusPlus:
        return {1, 1, 1, 3, 3};
    case CubicVariant::PlusPlusMinus:
        return {1, 1, -1, -3, -3};
    case CubicVariant::PlusMinusMinus:
        return {1, -1, -1, 3, 3};
    case CubicVariant::DoubleStep:
        return {2, 2, 2, -21, 21};
    }
    throw std::invalid_argument("unknown cubic variant");
}

} // namespace

std::pair<Rat, Rat> cubic_denominator_factors(CubicVariant variant, const Rat& x) {
    const Rat xx = x * x;
    switch (variant) {
    case CubicVariant::PlusPlusPlus:
    case CubicVariant::PlusMinusMinus:
        return {1 + x - xx, 1 - 4 * x - xx};
    case CubicVariant::PlusPlusMinus:
        return {1 - x - xx, 1 + 4 * x - xx};
    case CubicVariant::DoubleStep:
        return {1 - 3 * x + xx, 1 - 18 * x + xx};
    }
    throw std::invalid_argument("unknown cubic variant");
}

Rat cubic_sum_closed(const CubicSumSpec& spec) {
    if (spec.n < 0)
        throw std::invalid_argument("upper limit n must be >= 0");
    if (spec.x == 0)
        throw std::invalid_argument("weight base x must be nonzero");
    const auto [f1, f2] = cubic_denominator_factors(spec.variant, spec.x);
    if (f1 == 0)
        throw VanishingDenominator(1);
    if (f2 == 0)
        throw VanishingDenominator(2);
    const Pattern pat = pattern_of(spec.variant);
    Sequence g(spec.gseed), h(spec.hseed), kk(spec.kseed);
    const auto term = [&](long long j) {
        const BigInt prod = g.at(spec.p + pat.eg * j) * h.at(spec.q + pat.eh * j) *
                            kk.at(spec.r + pat.ek * j);
        return Rat(prod);
    };
    const Rat& x = spec.x;
    const Rat xx = x * x;
    const Rat lead = xx * (x + pat.A); // x^2 (x + A)
    const Rat edge = pat.B * x - 1;    // B x - 1
    const long long n = spec.n;
    const Rat head = rat_pow(x, n + 1) * (lead * term(n) + edge * term(n + 1) +
                                          xx * term(n - 1) - x * term(n + 2));
    const Rat tail = -lead * term(-1) - edge * term(0) - xx * term(-2) + x * term(1);
    return (head + tail) / (f1 * f2);
}

Rat cubic_sum_brute(const CubicSumSpec& spec) {
    if (spec.n < 0)
        throw std::invalid_argument("upper limit n must be >= 0");
    const Pattern pat = pattern_of(spec.variant);
    Sequence g(spec.gseed), h(spec.hseed), kk(spec.kseed);
    Rat total(0);
    Rat xp(1);
    for (long long k = 0; k <= spec.n; ++k) {
        const BigInt prod = g.at(spec.p + pat.eg * k) * h.at(spec.q + pat.eh * k) *
                            kk.at(spec.r + pat.ek * k);
        total += xp * Rat(prod);
        xp *= spec.x;
    }
    return total;
}

} // namespace fibsum
