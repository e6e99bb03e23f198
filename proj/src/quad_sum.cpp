#include "fibsum/quad_sum.hpp"

#include <stdexcept>
#include <vector>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

int sign_of(long long e) { return e % 2 == 0 ? 1 : -1; }

// Shared sequence caches for one evaluation.
struct Ctx {
    const QuadSumSpec& s;
    Sequence g;
    Sequence h;
    explicit Ctx(const QuadSumSpec& spec) : s(spec), g(spec.gseed), h(spec.hseed) {}
};

Rat p2_impl(const Ctx& ctx, long long v, long long w, int shift) {
    const QuadSumSpec& s = ctx.s;
    const int flip = sign_of(s.b + s.d + 1);
    Rat total(0);
    Rat xp(1);
    int sgn = 1;
    for (long long k = 0; k <= v; ++k) {
        const BigInt prod =
            ctx.g.at(s.a + shift + s.b * (w - k)) * ctx.h.at(s.c + shift + s.d * (w - k));
        total += Rat(sgn) * Rat(binom(v, k)) * xp * Rat(prod);
        xp *= s.x;
        sgn *= flip;
    }
    return total;
}

// Q_2(v,w) with the reciprocal delta powers already computed.
Rat q2_impl(const Ctx& ctx, long long v, long long w, const Rat& inv1, const Rat& inv2) {
    const Rat mid = p2_impl(ctx, v, w, 0);
    const Rat wings = p2_impl(ctx, v, w, -1) + p2_impl(ctx, v, w, +1);
    return ((2 * inv1 + 3 * inv2) * mid + (inv1 - inv2) * wings) / 5;
}

// One bracket of the m-indexed closed forms. Contributes
//   -lead * ( A(n) x^{n+v} Q_2(v, n+v) - bmul x^{v-1} Q_2(v, v-1) )
// where A is a polynomial in n with constant-first coefficients `apoly`.
struct ClosedEntry {
    long long v;
    long long lead;
    std::vector<long long> apoly;
    long long bmul;
};

const std::vector<ClosedEntry>& closed_form_entries(int m) {
    static const std::vector<std::vector<ClosedEntry>> table = {
        // m = 0
        {{1, 1, {1}, 1}},
        // m = 1
        {{1, 1, {1, 1}, 0}, {2, 1, {1}, 1}},
        // m = 2
        {{1, 1, {1, 2, 1}, 0}, {2, 1, {3, 2}, 1}, {3, 2, {1}, 1}},
        // m = 3
        {{1, 1, {1, 3, 3, 1}, 0},
         {2, 1, {7, 9, 3}, 1},
         {3, 6, {2, 1}, 1},
         {4, 6, {1}, 1}},
        // m = 4
        {{1, 1, {1, 4, 6, 4, 1}, 0},
         {2, 1, {15, 28, 18, 4}, 1},
         {3, 2, {25, 24, 6}, 7},
         {4, 12, {5, 2}, 3},
         {5, 24, {1}, 1}},
        // m = 5
        {{1, 1, {1, 5, 10, 10, 5, 1}, 0},
         {2, 1, {31, 75, 70, 30, 5}, 1},
         {3, 10, {18, 25, 12, 2}, 3},
         {4, 30, {13, 10, 2}, 5},
         {5, 120, {3, 1}, 2},
         {6, 120, {1}, 1}},
    };
    if (m < 0 || m > 5)
        throw std::invalid_argument("weight power m must be in 0..5");
    return table[static_cast<std::size_t>(m)];
}

BigInt poly_eval(const std::vector<long long>& coeffs, long long n) {
    BigInt value(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        value = value * n + *it;
    return value;
}

void require_nonsingular(const Rat& d1, const Rat& d2) {
    if (d1 == 0)
        throw VanishingDenominator(1);
    if (d2 == 0)
        throw VanishingDenominator(2);
}

} // namespace

Rat delta1(long long b, long long d, const Rat& x) {
    const long long s = b + d;
    return 1 - Rat(lucas_at(s)) * x + Rat(sign_of(s)) * x * x;
}

Rat delta2(long long b, long long d, const Rat& x) {
    const long long t = b - d;
    return 1 - Rat(sign_of(d)) * Rat(lucas_at(t)) * x + Rat(sign_of(t)) * x * x;
}

Rat p2(long long v, long long w, const QuadSumSpec& spec, int shift) {
    if (v < 0)
        throw std::invalid_argument("p2 requires v >= 0");
    if (shift < -1 || shift > 1)
        throw std::invalid_argument("p2 shift must be -1, 0 or +1");
    Ctx ctx(spec);
    return p2_impl(ctx, v, w, shift);
}

Rat q2(long long v, long long w, const QuadSumSpec& spec) {
    if (v < 0)
        throw std::invalid_argument("q2 requires v >= 0");
    const Rat d1 = delta1(spec.b, spec.d, spec.x);
    const Rat d2 = delta2(spec.b, spec.d, spec.x);
    require_nonsingular(d1, d2);
    Ctx ctx(spec);
    return q2_impl(ctx, v, w, rat_pow(d1, -v), rat_pow(d2, -v));
}

Rat quad_sum_closed(const QuadSumSpec& spec) {
    if (spec.n < 0)
        throw std::invalid_argument("upper limit n must be >= 0");
    if (spec.x == 0)
        throw std::invalid_argument("weight base x must be nonzero");
    const Rat d1 = delta1(spec.b, spec.d, spec.x);
    const Rat d2 = delta2(spec.b, spec.d, spec.x);
    require_nonsingular(d1, d2);
    Ctx ctx(spec);
    Rat total(0);
    for (const ClosedEntry& e : closed_form_entries(spec.m)) {
        const Rat inv1 = rat_pow(d1, -e.v);
        const Rat inv2 = rat_pow(d2, -e.v);
        Rat part = Rat(poly_eval(e.apoly, spec.n)) * rat_pow(spec.x, spec.n + e.v) *
                   q2_impl(ctx, e.v, spec.n + e.v, inv1, inv2);
        if (e.bmul != 0)
            part -= Rat(e.bmul) * rat_pow(spec.x, e.v - 1) *
                    q2_impl(ctx, e.v, e.v - 1, inv1, inv2);
        total -= Rat(e.lead) * part;
    }
    return total;
}

Rat quad_sum_brute(const QuadSumSpec& spec) {
    if (spec.n < 0)
        throw std::invalid_argument("upper limit n must be >= 0");
    Sequence g(spec.gseed);
    Sequence h(spec.hseed);
    Rat total(0);
    Rat xp(1);
    for (long long k = 0; k <= spec.n; ++k) {
        BigInt weight(1);
        for (int i = 0; i < spec.m; ++i)
            weight *= k;
        const BigInt prod = g.at(spec.a + spec.b * k) * h.at(spec.c + spec.d * k);
        total += xp * Rat(weight * prod);
        xp *= spec.x;
    }
    return total;
}

Rat quadspec_closed(long long v, long long w, const QuadSumSpec& spec) {
    if (v < 0)
        throw std::invalid_argument("quadspec_closed requires v >= 0");
    if (spec.d != spec.b && spec.d != -spec.b)
        throw std::invalid_argument("quadspec_closed requires d = b or d = -b");
    const Rat d1 = delta1(spec.b, spec.d, spec.x);
    const Rat d2 = delta2(spec.b, spec.d, spec.x);
    require_nonsingular(d1, d2);
    Ctx ctx(spec);
    const Rat inv1 = rat_pow(d1, -v);
    const Rat inv2 = rat_pow(d2, -v);
    const Rat pmain = p2_impl(ctx, v, w, 0);
    const BigInt center = ctx.g.at(spec.a) * ctx.h.at(spec.c);
    const BigInt below = ctx.g.at(spec.a - 1) * ctx.h.at(spec.c - 1);
    const BigInt above = ctx.g.at(spec.a + 1) * ctx.h.at(spec.c + 1);
    if (spec.d == spec.b) {
        const int sb = sign_of(spec.b);
        const Rat base = 1 - Rat(sb) * spec.x; // 1 - (-1)^b x
        const BigInt bracket = 3 * center - below - above;
        return inv1 * pmain + Rat(sign_of(spec.b * w)) * rat_pow(base, v) *
                                  (inv2 - inv1) * Rat(bracket) / 5;
    }
    const Rat base = 1 - spec.x;
    const BigInt bracket = 2 * center + below + above;
    return inv2 * pmain + rat_pow(base, v) * (inv1 - inv2) * Rat(bracket) / 5;
}

Rat quad_special(const QuadSumSpec& spec) {
    if (spec.n < 0)
        throw std::invalid_argument("upper limit n must be >= 0");
    const bool alternating = spec.b == 1 && spec.d == 1 && spec.x == -1;
    const bool convolution = spec.b == 1 && spec.d == -1 && spec.x == 1;
    if (spec.m != 0 || (!alternating && !convolution))
        throw UnsupportedLimit();
    Sequence g(spec.gseed);
    Sequence h(spec.hseed);
    const long long p = spec.a;
    const long long q = spec.c;
    const long long n = spec.n;
    if (alternating) {
        const BigInt head = g.at(p + n) * h.at(q + n) + g.at(p + n + 1) * h.at(q + n + 1);
        const BigInt slope =
            3 * g.at(p) * h.at(q) - g.at(p - 1) * h.at(q - 1) - g.at(p + 1) * h.at(q + 1);
        const BigInt rest = 4 * g.at(p) * h.at(q) - g.at(p + 1) * h.at(q + 1);
        const BigInt num = sign_of(n) * head + n * slope + rest;
        return Rat(num) / 5;
    }
    const BigInt head = g.at(p + n) * h.at(q - n) - g.at(p + n + 1) * h.at(q - n - 1);
    const BigInt slope =
        2 * g.at(p) * h.at(q) + g.at(p - 1) * h.at(q - 1) + g.at(p + 1) * h.at(q + 1);
    const BigInt rest = 4 * g.at(p) * h.at(q) + g.at(p + 1) * h.at(q - 1);
    const BigInt num = head + n * slope + rest;
    return Rat(num) / 5;
}

Rat quad_sum_eval(const QuadSumSpec& spec) {
    if (delta1(spec.b, spec.d, spec.x) != 0 && delta2(spec.b, spec.d, spec.x) != 0)
        return quad_sum_closed(spec);
    return quad_special(spec);
}

Rat z_sum_ff(long long a, long long b, long long c, long long d, const Rat& x,
             long long n) {
    if (n < 0)
        throw std::invalid_argument("upper limit n must be >= 0");
    const Rat d1 = delta1(b, d, x);
    const Rat d2 = delta2(b, d, x);
    require_nonsingular(d1, d2);
    Sequence lucas(LUCAS_SEED);
    const Rat xn1 = rat_pow(x, n + 1);
    const long long s = b + d;
    const long long t = b - d;
    const Rat sbd(sign_of(s));
    const Rat sb(sign_of(b));
    const Rat z1 = (xn1 * (sbd * Rat(lucas.at(a + c + s * n)) * x -
                           Rat(lucas.at(a + c + s * (n + 1)))) -
                    (sbd * Rat(lucas.at(a + c - s)) * x - Rat(lucas.at(a + c)))) /
                   (5 * d1);
    const Rat z2 = Rat(-sign_of(c)) *
                   (xn1 * Rat(sign_of(d * (n + 1))) *
                        (sb * Rat(lucas.at(a - c + t * n)) * x -
                         Rat(lucas.at(a - c + t * (n + 1)))) -
                    (sb * Rat(lucas.at(a - c - t)) * x - Rat(lucas.at(a - c)))) /
                   (5 * d2);
    return z1 + z2;
}

} // namespace fibsum
