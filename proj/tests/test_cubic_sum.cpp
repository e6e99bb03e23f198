#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "fibsum/cubic_sum.hpp"
#include "fibsum/errors.hpp"

using namespace fibsum;

namespace {

CubicSumSpec mk(CubicVariant variant, long long p, long long q, long long r, Rat x,
                long long n, Seed g = FIB_SEED, Seed h = FIB_SEED,
                Seed k = FIB_SEED) {
    CubicSumSpec s;
    s.variant = variant;
    s.p = p;
    s.q = q;
    s.r = r;
    s.x = std::move(x);
    s.n = n;
    s.gseed = std::move(g);
    s.hseed = std::move(h);
    s.kseed = std::move(k);
    return s;
}

const std::vector<CubicVariant> kVariants = {
    CubicVariant::PlusPlusPlus, CubicVariant::PlusPlusMinus,
    CubicVariant::PlusMinusMinus, CubicVariant::DoubleStep};

const std::vector<Rat> kWeightGrid = {
    Rat(1),  Rat(-1), Rat(2),          Rat(3),          make_rat(1, 2),
    make_rat(1, 3),   Rat(-2), Rat(-3), make_rat(-1, 2), make_rat(-1, 3)};

const std::vector<Seed> kSeeds = {Seed{0, 1}, Seed{2, 1}, Seed{1, 1}, Seed{3, -2}};

} // namespace

TEST_CASE("cubic denominator factors are nonzero on the rational grid") {
    // Every factor is a quadratic with irrational roots; spot-check values.
    CHECK(cubic_denominator_factors(CubicVariant::PlusPlusPlus, Rat(1)) ==
          std::pair<Rat, Rat>{Rat(1), Rat(-4)});
    CHECK(cubic_denominator_factors(CubicVariant::PlusPlusMinus, Rat(-1)) ==
          std::pair<Rat, Rat>{Rat(1), Rat(-4)});
    CHECK(cubic_denominator_factors(CubicVariant::DoubleStep, Rat(2)) ==
          std::pair<Rat, Rat>{Rat(-1), Rat(-31)});
    for (CubicVariant v : kVariants)
        for (const Rat& x : kWeightGrid) {
            const auto [f1, f2] = cubic_denominator_factors(v, x);
            CHECK(f1 != 0);
            CHECK(f2 != 0);
        }
}

TEST_CASE("frozen anchor values for the cubic sums") {
    // sum F_k^3, k=0..3 = 0 + 1 + 1 + 8 = 10.
    CHECK(cubic_sum_brute(mk(CubicVariant::PlusPlusPlus, 0, 0, 0, Rat(1), 3)) ==
          Rat(10));
    CHECK(cubic_sum_closed(mk(CubicVariant::PlusPlusPlus, 0, 0, 0, Rat(1), 3)) ==
          Rat(10));
    // sum F_{2k}^3, k=0..2 = 0 + 1 + 27 = 28.
    CHECK(cubic_sum_closed(mk(CubicVariant::DoubleStep, 0, 0, 0, Rat(1), 2)) ==
          Rat(28));
    // alternating: F0^3 - F1^2 F_{-1} + F2^2 F_{-2} = 0 - 1 - 1 = -2.
    CHECK(cubic_sum_brute(mk(CubicVariant::PlusPlusMinus, 0, 0, 0, Rat(-1), 2)) ==
          Rat(-2));
    CHECK(cubic_sum_closed(mk(CubicVariant::PlusPlusMinus, 0, 0, 0, Rat(-1), 2)) ==
          Rat(-2));
    // n = 0 collapses to the bare product for every variant.
    for (CubicVariant v : kVariants) {
        const CubicSumSpec s =
            mk(v, 1, -2, 2, make_rat(-1, 3), 0, Seed{2, 1}, Seed{3, -2}, Seed{1, 1});
        Sequence g(s.gseed), h(s.hseed), kq(s.kseed);
        const BigInt single = g.at(1) * h.at(-2) * kq.at(2);
        CHECK(cubic_sum_brute(s) == Rat(single));
        CHECK(cubic_sum_closed(s) == Rat(single));
    }
}

TEST_CASE("closed cubic sums match the brute-force oracle across a grid") {
    std::size_t cursor = 0;
    for (CubicVariant v : kVariants)
        for (long long p = -2; p <= 2; ++p)
            for (long long q = -2; q <= 2; ++q)
                for (long long r = -2; r <= 2; ++r) {
                    const Rat& x = kWeightGrid[cursor % kWeightGrid.size()];
                    const long long n = static_cast<long long>(cursor % 9);
                    const Seed& g = kSeeds[cursor % kSeeds.size()];
                    const Seed& h = kSeeds[(cursor / 4) % kSeeds.size()];
                    const Seed& k = kSeeds[(cursor / 16) % kSeeds.size()];
                    ++cursor;
                    const CubicSumSpec s = mk(v, p, q, r, x, n, g, h, k);
                    CAPTURE(static_cast<int>(v));
                    CAPTURE(p);
                    CAPTURE(q);
                    CAPTURE(r);
                    CAPTURE(rat_str(x));
                    CAPTURE(n);
                    CHECK(cubic_sum_closed(s) == cubic_sum_brute(s));
                }
}

TEST_CASE("cubic partial sums telescope by exactly one term") {
    for (CubicVariant v : kVariants) {
        const CubicSumSpec base =
            mk(v, 1, 0, -1, make_rat(-1, 2), 0, Seed{3, -2}, LUCAS_SEED, Seed{1, 1});
        for (long long n = 1; n <= 8; ++n) {
            CubicSumSpec cur = base, prev = base;
            cur.n = n;
            prev.n = n - 1;
            CubicSumSpec single = base;
            single.n = 0;
            const long long step = v == CubicVariant::DoubleStep ? 2 : 1;
            const long long sh = v == CubicVariant::PlusMinusMinus ? -1 : 1;
            const long long sk = v == CubicVariant::PlusPlusPlus ||
                                         v == CubicVariant::DoubleStep
                                     ? 1
                                     : -1;
            single.p = base.p + step * n;
            single.q = base.q + sh * step * n;
            single.r = base.r + sk * step * n;
            CHECK(cubic_sum_brute(cur) - cubic_sum_brute(prev) ==
                  rat_pow(base.x, n) * cubic_sum_brute(single));
        }
    }
}

TEST_CASE("Fibonacci and Lucas cube sums satisfy both published right sides") {
    Sequence fib(FIB_SEED), lucas(LUCAS_SEED);
    for (long long n = 0; n <= 12; ++n) {
        const int sn = n % 2 == 0 ? 1 : -1;
        const Rat viaCubes =
            cubic_sum_closed(mk(CubicVariant::PlusPlusPlus, 0, 0, 0, Rat(1), n));
        // Unsimplified product form, its Cassini-reduced form, and the
        // decomposed F_{3n+2} form must all agree.
        const BigInt fProd = fib.at(n - 1) * fib.at(n) * fib.at(n) +
                             fib.at(n) * fib.at(n + 1) * fib.at(n + 1) -
                             fib.at(n + 1) * fib.at(n - 1) * fib.at(n - 1) + 1;
        const BigInt fCassini =
            fib.at(n) * fib.at(n + 1) * fib.at(n + 1) - sn * fib.at(n - 1) + 1;
        const BigInt fSplit = fib.at(3 * n + 2) - 6 * sn * fib.at(n - 1) + 5;
        CHECK(viaCubes == Rat(fProd) / 2);
        CHECK(viaCubes == Rat(fCassini) / 2);
        CHECK(viaCubes == Rat(fSplit) / 10);

        const Rat viaLucas = cubic_sum_closed(
            mk(CubicVariant::PlusPlusPlus, 0, 0, 0, Rat(1), n, LUCAS_SEED,
               LUCAS_SEED, LUCAS_SEED));
        const BigInt lProd = lucas.at(n - 1) * lucas.at(n) * lucas.at(n) +
                             lucas.at(n) * lucas.at(n + 1) * lucas.at(n + 1) -
                             lucas.at(n + 1) * lucas.at(n - 1) * lucas.at(n - 1) + 19;
        const BigInt lCassini =
            lucas.at(n) * lucas.at(n + 1) * lucas.at(n + 1) + 5 * sn * lucas.at(n - 1) + 19;
        const BigInt lSplit = lucas.at(3 * n + 2) + 6 * sn * lucas.at(n - 1) + 19;
        CHECK(viaLucas == Rat(lProd) / 2);
        CHECK(viaLucas == Rat(lCassini) / 2);
        CHECK(viaLucas == Rat(lSplit) / 2);

        const Rat viaEven =
            cubic_sum_closed(mk(CubicVariant::DoubleStep, 0, 0, 0, Rat(1), n));
        const BigInt eSplit = fib.at(6 * n + 3) - 12 * fib.at(2 * n + 1) + 10;
        CHECK(viaEven == Rat(eSplit) / 20);
    }
}
