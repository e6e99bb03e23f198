#include "fibsum/sequence.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fibsum {

namespace {

// Halve an even value, asserting exactness.
BigInt half_exact(const BigInt& v) {
    if (v % 2 != 0) throw InternalParity();
    return v / 2;
}

} // namespace

FLPair fl_fast(long long n) {
    unsigned long long mag = n < 0 ? 0ULL - static_cast<unsigned long long>(n)
                                   : static_cast<unsigned long long>(n);
    BigInt f = 0;
    BigInt l = 2;
    if (mag > 0) {
        int bits = 0;
        for (unsigned long long t = mag; t != 0; t >>= 1) ++bits;
        bool odd = false; // parity of the index currently held in (f, l)
        for (int i = bits - 1; i >= 0; --i) {
            if ((mag >> i) & 1ULL) {
                BigInt nf = half_exact(f + l);
                BigInt nl = half_exact(5 * f + l);
                f = std::move(nf);
                l = std::move(nl);
                odd = !odd;
            }
            if (i > 0) {
                BigInt nf = f * l;
                BigInt nl = l * l - (odd ? -2 : 2);
                f = std::move(nf);
                l = std::move(nl);
                odd = false;
            }
        }
    }
    if (n < 0) {
        // F_{-n} = (-1)^{n+1} F_n, L_{-n} = (-1)^n L_n with n = |n| here.
        if ((mag & 1ULL) == 0) f = -f;
        if ((mag & 1ULL) != 0) l = -l;
    }
    return {std::move(f), std::move(l)};
}

BigInt gen_at(const Seed& seed, long long n) {
    FLPair fl = fl_fast(n);
    BigInt bracket = (2 * seed.g1 - seed.g0) * fl.f + seed.g0 * fl.l;
    return half_exact(bracket);
}

std::vector<BigInt> gen_naive(const Seed& seed, long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("gen_naive: lo > hi");
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    auto put = [&](long long n, BigInt v) {
        if (n >= lo && n <= hi) out[static_cast<std::size_t>(n - lo)] = std::move(v);
    };
    put(0, seed.g0);
    put(1, seed.g1);
    if (hi >= 2) {
        BigInt a = seed.g0, b = seed.g1;
        for (long long n = 2; n <= hi; ++n) {
            BigInt c = a + b;
            a = std::move(b);
            b = c;
            put(n, std::move(c));
        }
    }
    if (lo < 0) {
        BigInt a = seed.g0, b = seed.g1; // (G_n, G_{n+1}) walking down
        for (long long n = -1; n >= lo; --n) {
            BigInt c = b - a; // G_{n} = G_{n+2} - G_{n+1}
            b = std::move(a);
            a = c;
            put(n, std::move(c));
        }
    }
    return out;
}

BigInt binom(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binom: n < 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

Sequence::Sequence(Seed seed) : seed_(std::move(seed)) {
    pos_.push_back(seed_.g0);
    pos_.push_back(seed_.g1);
}

const BigInt& Sequence::at(long long n) const {
    if (n > kSmallIndexLimit || n < -kSmallIndexLimit) {
        auto it = far_.find(n);
        if (it == far_.end()) it = far_.emplace(n, gen_at(seed_, n)).first;
        return it->second;
    }
    if (n >= 0) {
        auto i = static_cast<std::size_t>(n);
        while (pos_.size() <= i) {
            std::size_t s = pos_.size();
            pos_.push_back(pos_[s - 1] + pos_[s - 2]);
        }
        return pos_[i];
    }
    auto i = static_cast<std::size_t>(-n - 1); // n = -1 -> 0
    while (neg_.size() <= i) {
        // G_{-(s+1)} = G_{-(s-1)} - G_{-s}; the two predecessors live in
        // neg_[s-2], neg_[s-1] (or the seed for the first two entries).
        std::size_t s = neg_.size();
        const BigInt& up1 = s == 0 ? seed_.g1 : (s == 1 ? seed_.g0 : neg_[s - 2]);
        const BigInt& up0 = s == 0 ? seed_.g0 : neg_[s - 1];
        neg_.push_back(up1 - up0);
    }
    return neg_[i];
}

} // namespace fibsum
