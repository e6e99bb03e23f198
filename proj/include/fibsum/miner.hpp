#pragma once

#include <string>
#include <vector>

#include "fibsum/rat.hpp"

namespace fibsum {

// One term  coeff * prod_{j=1..p} F_{q_j + offsets[j]}  of a linear
// combination of products of shifted Fibonacci numbers.
struct MinerTerm {
    Rat coeff = Rat(1);
    std::vector<long long> offsets; // one shift per factor position j

    bool operator==(const MinerTerm&) const = default;
};

// Canonical term order: by offset vector, then by coefficient.
bool operator<(const MinerTerm& a, const MinerTerm& b);

enum class MineMode {
    Solve,     // determine coefficients by exact linear solve (default)
    Enumerate, // try every coefficient in the configured range
};

// A search problem: find combinations of at most `budget` terms, with shifts
// drawn from [offsetLo, offsetHi], equal to the given left-hand side at every
// point of the verification grid [qLo, qHi]^p and at `confirmSamples` random
// points with |q_j| <= 40.
struct MinerProblem {
    int p = 1;                     // factors per product
    std::vector<MinerTerm> lhsTerms;
    int budget = 1;                // max right-hand terms; must be < lhs size
    long long offsetLo = -3;
    long long offsetHi = 3;
    long long qLo = -2;            // verification grid, per coordinate
    long long qHi = 2;
    MineMode mode = MineMode::Solve;
    long long coeffLo = -3;        // Enumerate mode: numerator range; the
    long long coeffHi = 3;         // denominators tried are 1,2,4,5,10,20,25
    int confirmSamples = 20;
    unsigned long long rngSeed = 123456789ULL; // fixed for reproducibility
    bool useCache = true;          // toggle the shared product-vector cache
};

// A verified reduction. Terms are canonical: zero coefficients dropped,
// equal offset vectors merged, sorted by operator<.
struct MinerSolution {
    std::vector<MinerTerm> rhsTerms;
    long long gridPoints = 0; // grid size it was verified on
    int confirmed = 0;        // random confirmation samples that passed
};

bool operator<(const MinerSolution& a, const MinerSolution& b);
bool operator==(const MinerSolution& a, const MinerSolution& b);

// prod_j F_{q_j + offsets[j]} at every grid point of [qLo, qHi]^p, p =
// offsets.size(), points in lexicographic order (first coordinate slowest).
std::vector<Rat> eval_product_vector(const std::vector<long long>& offsets,
                                     long long qLo, long long qHi);

// Outcome of checking lhs = rhs on the grid plus random samples.
struct MinerVerdict {
    bool verified = false;
    std::vector<long long> counterexample; // first failing q, empty if none
};

// Exact check of lhs = rhs at every grid point (lexicographic order, so the
// reported counterexample is the first in that order) and then at
// confirmSamples random points with |q_j| <= 40. Evaluates every product
// directly through fast doubling; shares nothing with mine()'s cache.
MinerVerdict verify_candidate(const std::vector<MinerTerm>& lhs,
                              const std::vector<MinerTerm>& rhs, long long qLo,
                              long long qHi, int confirmSamples,
                              unsigned long long rngSeed);

// Enumerates candidate shift sets in nondecreasing lexicographic order (so
// permuted duplicates are never generated), determines coefficients per the
// problem mode, and returns every distinct combination that passes
// verify_candidate, in canonical order. Repeated runs with the same rngSeed
// return identical lists. Throws std::invalid_argument on malformed problems.
std::vector<MinerSolution> mine(const MinerProblem& problem);

// Builds lhs terms from an expression such as "F[q+2] - F[q+1]" (p = 1, the
// index variable may be written q or q1) or "F[q1+2]*F[q2] - F[q1]*F[q2]"
// (p >= 2, factor j indexed by q1..qp). Each term must contain exactly one
// F factor per position, with index q_j plus a constant shift; rational
// literal factors and leading signs form the coefficient. Throws SchemaError
// when the expression does not fit that shape.
std::vector<MinerTerm> miner_terms_from_expr(const std::string& text, int p);

} // namespace fibsum
