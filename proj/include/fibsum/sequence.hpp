#pragma once

#include <deque>
#include <map>
#include <vector>

#include "fibsum/rat.hpp"

namespace fibsum {

// Seed (g0, g1) of a generalized Fibonacci sequence G satisfying
// G_{n+2} = G_{n+1} + G_n for all signed n.
struct Seed {
    BigInt g0;
    BigInt g1;
    bool operator==(const Seed&) const = default;
};

inline const Seed FIB_SEED{0, 1};
inline const Seed LUCAS_SEED{2, 1};

// Fibonacci/Lucas values at a common index.
struct FLPair {
    BigInt f;
    BigInt l;
};

// (F_n, L_n) for any signed n by most-significant-bit-first doubling:
// on a set bit advance F_{n+1} = (F_n + L_n)/2, L_{n+1} = (5F_n + L_n)/2
// (the halvings are exact), between bits double F_{2n} = F_n L_n,
// L_{2n} = L_n^2 - 2(-1)^n. Negative n via F_{-n} = (-1)^{n+1} F_n,
// L_{-n} = (-1)^n L_n.
FLPair fl_fast(long long n);

inline BigInt fib_at(long long n) { return fl_fast(n).f; }
inline BigInt lucas_at(long long n) { return fl_fast(n).l; }

// G_n = [(2*g1 - g0)*F_n + g0*L_n] / 2; the bracket is provably even and
// the division is asserted exact (InternalParity otherwise).
BigInt gen_at(const Seed& seed, long long n);

// Oracle: the table [G_lo, ..., G_hi] by forward recurrence from the seed
// and backward recurrence G_{n-1} = G_{n+1} - G_n. Requires lo <= hi.
std::vector<BigInt> gen_naive(const Seed& seed, long long lo, long long hi);

// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binom(long long n, long long k);

// Indices with |n| <= this bound are served from a recurrence-built table
// by Sequence; larger indices fall through to gen_at (fast doubling).
inline constexpr long long kSmallIndexLimit = 64;

// Cached evaluator for one seed. Grows a two-sided value table on demand;
// intended for the dense small-index access patterns of the summation and
// catalog layers. Not thread-safe: use one instance per worker.
class Sequence {
public:
    explicit Sequence(Seed seed);

    // Value G_n. The reference stays valid for the life of the Sequence
    // (the containers below never relocate elements on growth).
    const BigInt& at(long long n) const;

    const Seed& seed() const { return seed_; }

private:
    Seed seed_;
    // pos_[i] = G_i; neg_[i] = G_{-1-i}
    mutable std::deque<BigInt> pos_;
    mutable std::deque<BigInt> neg_;
    mutable std::map<long long, BigInt> far_; // |n| > kSmallIndexLimit
};

} // namespace fibsum
