#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "fibsum/errors.hpp"
#include "fibsum/series.hpp"

using namespace fibsum;

namespace {

const Rat kTiny = Rat(1) / Rat(boost::multiprecision::pow(BigInt(10), 20));

QuadSumSpec quad(long long a, long long b, long long c, long long d, int m, Rat x,
                 Seed g = FIB_SEED, Seed h = FIB_SEED) {
    QuadSumSpec s;
    s.a = a;
    s.b = b;
    s.c = c;
    s.d = d;
    s.m = m;
    s.x = std::move(x);
    s.gseed = std::move(g);
    s.hseed = std::move(h);
    return s;
}

CubicSumSpec cubic(CubicVariant v, long long p, long long q, long long r, Rat x,
                   Seed g = FIB_SEED, Seed h = FIB_SEED, Seed k = FIB_SEED) {
    CubicSumSpec s;
    s.variant = v;
    s.p = p;
    s.q = q;
    s.r = r;
    s.x = std::move(x);
    s.gseed = std::move(g);
    s.hseed = std::move(h);
    s.kseed = std::move(k);
    return s;
}

Rat quad_partial(const QuadSumSpec& spec, long long n) {
    QuadSumSpec s = spec;
    s.n = n;
    return quad_sum_brute(s);
}

Rat cubic_partial(const CubicSumSpec& spec, long long n) {
    CubicSumSpec s = spec;
    s.n = n;
    return cubic_sum_brute(s);
}

const std::vector<Seed> kSeeds = {Seed{0, 1}, Seed{2, 1}, Seed{1, 1}, Seed{3, -2}};

} // namespace

TEST_CASE("convergence decisions respect the golden-ratio radius") {
    CHECK(converges(1, 1, make_rat(1, 4)));
    CHECK_FALSE(converges(1, 1, make_rat(1, 2)));
    for (long long b : {0LL, 1LL, -3LL})
        for (long long d : {0LL, 2LL, -1LL})
            CHECK(converges(b, d, Rat(0)));
    // Sign of x is immaterial.
    CHECK(converges(1, 1, make_rat(-1, 4)));
    CHECK_FALSE(converges(-1, 1, make_rat(-1, 2)));
    // Radius shrinks with the combined index step.
    CHECK(converges(2, 1, make_rat(1, 5)));
    CHECK_FALSE(converges(2, 1, make_rat(1, 4)));
    CHECK(converges(3, 3, make_rat(1, 20)));
    CHECK_FALSE(converges(3, 3, make_rat(1, 17)));
}

TEST_CASE("convergence guard band rejects near-boundary weights") {
    // Fibonacci convergents of the radius 1/phi^2: F_{2k}/F_{2k+2} lands
    // closer to the boundary as k grows. |x phi^2 - 1| = phi^-2k / F_{2k+2},
    // so F34/F36 (about 5e-15 away) is decidable while F36/F38 (about 8e-16)
    // falls inside the 1e-15 band.
    const Rat inside = make_rat(fib_at(34), fib_at(36));
    const Rat banded = make_rat(fib_at(36), fib_at(38));
    CHECK(converges(1, 1, inside));
    CHECK_THROWS_AS(converges(1, 1, banded), Indeterminate);
    // Odd convergents approach from above: F35/F37 is just far enough out,
    // F37/F39 is banded again.
    CHECK_FALSE(converges(1, 1, make_rat(fib_at(35), fib_at(37))));
    CHECK_THROWS_AS(converges(1, 1, make_rat(fib_at(37), fib_at(39))), Indeterminate);
    // Step 0 compares |x| against 1 directly; the exact boundary is banded.
    CHECK(converges(0, 0, make_rat(99, 100)));
    CHECK_FALSE(converges(0, 0, make_rat(101, 100)));
    CHECK_THROWS_AS(converges(0, 0, Rat(1)), Indeterminate);
    CHECK_THROWS_AS(converges(0, 0, Rat(-1)), Indeterminate);
}

TEST_CASE("quadratic series anchor: Fibonacci squares at one quarter") {
    const Rat value = quad_series(quad(0, 1, 0, 1, 0, make_rat(1, 4)));
    CHECK(value == make_rat(12, 25));
    CHECK(quad_gf_forms(0, 0, GfDirection::PlusPlus, make_rat(1, 4), FIB_SEED,
                        FIB_SEED) == make_rat(12, 25));
}

TEST_CASE("quadratic series are the limits of their partial sums") {
    // Horizons sized so the geometric tail (|x| phi^(|b|+|d|))^n clears the
    // 1e-20 comparison threshold even with the k^5 weight attached.
    const std::vector<std::pair<QuadSumSpec, long long>> specs = {
        {quad(0, 1, 0, 1, 0, make_rat(1, 4)), 200},
        {quad(1, 1, -2, -1, 0, make_rat(-1, 5), Seed{2, 1}, Seed{3, -2}), 200},
        {quad(-1, 2, 2, 1, 0, make_rat(1, 5), Seed{1, 1}, LUCAS_SEED), 550},
    };
    for (const auto& [base, horizon] : specs)
        for (int m = 0; m <= 5; ++m) {
            QuadSumSpec s = base;
            s.m = m;
            const Rat limit = quad_series(s);
            CAPTURE(m);
            CHECK(abs(limit - quad_partial(s, horizon)) < kTiny);
        }
}

TEST_CASE("series tail equals the discarded closed-form boundary term") {
    const std::vector<QuadSumSpec> specs = {
        quad(0, 1, 0, 1, 0, make_rat(1, 4)),
        quad(1, 1, -2, -1, 0, make_rat(-1, 5), Seed{2, 1}, Seed{3, -2}),
        quad(-1, 2, 2, 1, 0, make_rat(1, 5), Seed{1, 1}, LUCAS_SEED),
    };
    for (const QuadSumSpec& s : specs) {
        const Rat limit = quad_series(s);
        for (long long n = 0; n <= 10; ++n) {
            CAPTURE(n);
            CHECK(limit - quad_partial(s, n) == rat_pow(s.x, n + 1) * q2(1, n + 1, s));
        }
    }
}

TEST_CASE("partial sums home in monotonically on the series value") {
    const QuadSumSpec s = quad(0, 1, 0, 1, 0, make_rat(1, 4));
    const Rat limit = quad_series(s);
    Rat prev = abs(limit - quad_partial(s, 20));
    for (long long n = 21; n <= 40; ++n) {
        const Rat cur = abs(limit - quad_partial(s, n));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("series evaluation refuses divergent and boundary weights") {
    CHECK_THROWS_AS(quad_series(quad(0, 1, 0, 1, 0, make_rat(1, 2))),
                    DivergentSeries);
    CHECK_THROWS_AS(quad_series(quad(0, 1, 0, 1, 0, Rat(1))), DivergentSeries);
    // Banded boundary input degrades to the divergence error.
    CHECK_THROWS_AS(quad_series(quad(0, 1, 0, 1, 0, make_rat(fib_at(36), fib_at(38)))),
                    DivergentSeries);
    CHECK_THROWS_AS(quad_series(quad(0, 2, 0, 1, 0, make_rat(1, 4))),
                    DivergentSeries);
    CHECK_THROWS_AS(
        quad_gf_forms(0, 0, GfDirection::PlusPlus, make_rat(2, 5), FIB_SEED, FIB_SEED),
        DivergentSeries);
    CHECK_THROWS_AS(cubic_gf(cubic(CubicVariant::PlusPlusPlus, 0, 0, 0, make_rat(1, 4))),
                    DivergentSeries);
    CHECK_THROWS_AS(cubic_gf(cubic(CubicVariant::DoubleStep, 0, 0, 0, make_rat(1, 16))),
                    DivergentSeries);
}

TEST_CASE("the two-term rational forms agree with the generic series") {
    const std::vector<Rat> xs = {make_rat(1, 5),  make_rat(-1, 5), make_rat(1, 4),
                                 make_rat(-1, 4), make_rat(1, 8),  make_rat(-1, 8)};
    const std::vector<std::pair<long long, long long>> pqs = {{0, 0}, {2, -1}, {-2, 1}};
    for (const Seed& g : kSeeds)
        for (const Seed& h : kSeeds)
            for (const Rat& x : xs)
                for (const auto& [p, q] : pqs) {
                    CHECK(quad_gf_forms(p, q, GfDirection::PlusPlus, x, g, h) ==
                          quad_series(quad(p, 1, q, 1, 0, x, g, h)));
                    CHECK(quad_gf_forms(p, q, GfDirection::PlusMinus, x, g, h) ==
                          quad_series(quad(p, 1, q, -1, 0, x, g, h)));
                }
    // x = 0 keeps only the k = 0 term.
    Sequence g(Seed{3, -2}), h(LUCAS_SEED);
    CHECK(quad_gf_forms(1, -2, GfDirection::PlusPlus, Rat(0), Seed{3, -2},
                        LUCAS_SEED) == Rat(g.at(1) * h.at(-2)));
    CHECK(quad_gf_forms(1, -2, GfDirection::PlusMinus, Rat(0), Seed{3, -2},
                        LUCAS_SEED) == Rat(g.at(1) * h.at(-2)));
}

TEST_CASE("cubic series are the limits of their partial sums") {
    struct Probe {
        CubicSumSpec spec;
        long long horizon;
    };
    const std::vector<Probe> probes = {
        {cubic(CubicVariant::PlusPlusPlus, 0, 0, 0, make_rat(1, 5)), 350},
        {cubic(CubicVariant::PlusPlusPlus, 1, -1, 2, make_rat(-1, 8), Seed{2, 1},
               Seed{1, 1}, Seed{3, -2}),
         150},
        {cubic(CubicVariant::PlusPlusMinus, 0, 1, -1, make_rat(1, 8), LUCAS_SEED),
         150},
        {cubic(CubicVariant::PlusMinusMinus, -1, 0, 1, make_rat(-1, 8)), 150},
        {cubic(CubicVariant::DoubleStep, 0, 0, 0, make_rat(1, 20)), 500},
        {cubic(CubicVariant::DoubleStep, 1, 0, -1, make_rat(-1, 50), Seed{2, 1}),
         100},
    };
    for (const Probe& probe : probes) {
        const Rat limit = cubic_gf(probe.spec);
        CHECK(abs(limit - cubic_partial(probe.spec, probe.horizon)) < kTiny);
    }
}

TEST_CASE("cubic series at weight zero collapse to the seed product") {
    for (CubicVariant v :
         {CubicVariant::PlusPlusPlus, CubicVariant::PlusPlusMinus,
          CubicVariant::PlusMinusMinus, CubicVariant::DoubleStep}) {
        const CubicSumSpec s =
            cubic(v, 2, -1, 1, Rat(0), Seed{1, 1}, Seed{3, -2}, LUCAS_SEED);
        Sequence g(s.gseed), h(s.hseed), k(s.kseed);
        CHECK(cubic_gf(s) == Rat(g.at(2) * h.at(-1) * k.at(1)));
    }
}
