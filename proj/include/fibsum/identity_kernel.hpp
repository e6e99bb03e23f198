#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fibsum/sequence.hpp"

namespace fibsum {

// Decomposition G_n = alpha*F_n + beta*L_n of a seed.
struct AlphaBeta {
    Rat alpha;
    Rat beta;
};

// alpha = (g_{-1} + g_1)/2 with g_{-1} = g_1 - g_0; beta = g_0/2.
AlphaBeta decompose(const Seed& seed);

// Value of G_m * H_n computed through the expansion
// (1/5)*{(3H0-H1)*G_{m+n} + (2H1-H0)*G_{m+n+1}
//        + (-1)^n*[(2H0+H1)*G_{m-n} - (2H1-H0)*G_{m-n+1}]}.
Rat product_expand(const Seed& gseed, const Seed& hseed, long long m, long long n);

// Free integer parameters of an identity; only the declared ones are read.
struct ParamPoint {
    long long m = 0, n = 0, p = 0, q = 0, r = 0, s = 0, k = 0;
    long long get(char v) const;
    void set(char v, long long value);
};

// Cached sequence values for one seed assignment. F and L are fixed;
// G and H are the generalized slots. Not thread-safe; one per worker.
struct SeqSet {
    Sequence F{FIB_SEED};
    Sequence L{LUCAS_SEED};
    Sequence G{FIB_SEED};
    Sequence H{FIB_SEED};
    void assign(const Seed& g, const Seed& h) {
        G = Sequence(g);
        H = Sequence(h);
    }
};

using IdentitySide = std::function<Rat(const ParamPoint&, const SeqSet&)>;

struct CoreIdentity {
    std::string name;
    std::string vars;   // subset of "mnpqrsk", iteration order of the grid
    int seed_slots;     // 0: only F/L; 1: G; 2: G and H
    bool guarded;       // requires g0*g2 - g1^2 != 0 on the G seed
    IdentitySide lhs;
    IdentitySide rhs;
};

// The full registered identity table, in source order.
const std::vector<CoreIdentity>& core_identities();

// Lookup by name; nullptr when absent.
const CoreIdentity* find_core_identity(std::string_view name);

struct Verdict {
    bool equal;
    Rat lhs_value;
    Rat rhs_value;
};

// Evaluates both sides exactly. Throws GuardViolated when the identity
// is guarded and the G seed makes g0*g2 - g1^2 vanish.
Verdict check_core_identity(const CoreIdentity& id, const ParamPoint& params,
                            const SeqSet& seqs);

// RHS of the chosen summand expansion (which in 1..6); unused parameters
// among p,q,r,s are ignored by the lower-arity expansions.
Rat summand_expand(int which, long long p, long long q, long long r, long long s,
                   long long k);

// The five-seed grid used for verification.
const std::vector<Seed>& standard_seeds();

struct GridReport {
    std::string name;
    long long points = 0;
    long long failures = 0;
    std::string first_failure;
    bool passed() const { return failures == 0; }
};

// Checks one identity at every declared-variable point in [-range, range]
// crossed with every seed-slot combination drawn from `seeds`.
GridReport run_identity_grid(const CoreIdentity& id, long long range,
                             const std::vector<Seed>& seeds);

// All identities, reported in table order.
std::vector<GridReport> run_all_identity_grids(long long range,
                                               const std::vector<Seed>& seeds);

} // namespace fibsum
