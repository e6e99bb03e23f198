#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "fibsum/errors.hpp"
#include "fibsum/miner.hpp"
#include "fibsum/sequence.hpp"

using namespace fibsum;

namespace {

MinerTerm term(Rat coeff, std::vector<long long> offsets) {
    return {std::move(coeff), std::move(offsets)};
}

// Oracle for a term list at one q point, built on the recurrence table
// rather than on any code path the miner itself uses for evaluation.
Rat table_value(const std::vector<MinerTerm>& terms, const std::vector<long long>& q,
                const std::vector<BigInt>& table, long long tableLo) {
    Rat total(0);
    for (const MinerTerm& t : terms) {
        Rat v = t.coeff;
        for (std::size_t j = 0; j < q.size(); ++j) {
            v *= Rat(table[static_cast<std::size_t>(q[j] + t.offsets[j] - tableLo)]);
        }
        total += v;
    }
    return total;
}

// Recurrence-table check of lhs == rhs at every q in [lo, hi]^p.
bool holds_on_range(const std::vector<MinerTerm>& lhs, const std::vector<MinerTerm>& rhs,
                    long long lo, long long hi) {
    const std::size_t p = lhs.front().offsets.size();
    const long long tableLo = lo - 8;
    const std::vector<BigInt> table = gen_naive(FIB_SEED, tableLo, hi + 8);
    std::vector<long long> q(p, lo);
    while (true) {
        if (table_value(lhs, q, table, tableLo) != table_value(rhs, q, table, tableLo)) {
            return false;
        }
        std::size_t j = p;
        while (j-- > 0) {
            if (q[j] < hi) {
                ++q[j];
                break;
            }
            q[j] = lo;
            if (j == 0) return true;
        }
    }
}

} // namespace

TEST_CASE("product vectors walk the grid first coordinate slowest") {
    CHECK(eval_product_vector({0}, 0, 2) == std::vector<Rat>{Rat(0), Rat(1), Rat(1)});
    CHECK(eval_product_vector({0, 0}, 1, 1) == std::vector<Rat>{Rat(1)});
    CHECK(eval_product_vector({-1}, 0, 0) == std::vector<Rat>{Rat(1)});

    // Offsets (1, 2) over q in {0,1}^2: the second coordinate must tick
    // first, giving F1*F2, F1*F3, F2*F2, F2*F3.
    CHECK(eval_product_vector({1, 2}, 0, 1) ==
          std::vector<Rat>{Rat(1), Rat(2), Rat(1), Rat(2)});

    // Cross-check a longer single-factor vector against the recurrence table.
    const std::vector<Rat> got = eval_product_vector({3}, -5, 5);
    const std::vector<BigInt> table = gen_naive(FIB_SEED, -2, 8);
    REQUIRE(got.size() == 11);
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i] == Rat(table[i]));
    }
}

TEST_CASE("solve mode rediscovers the defining recurrence") {
    MinerProblem problem;
    problem.p = 1;
    problem.lhsTerms = {term(Rat(1), {2}), term(Rat(-1), {1})};
    problem.budget = 1;
    problem.offsetLo = -2;
    problem.offsetHi = 2;

    const std::vector<MinerSolution> sols = mine(problem);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].rhsTerms == std::vector<MinerTerm>{term(Rat(1), {0})});
    CHECK(sols[0].gridPoints == 5);
    CHECK(sols[0].confirmed == 20);

    // The wider default offset range finds the same unique reduction.
    problem.offsetLo = -3;
    problem.offsetHi = 3;
    CHECK(mine(problem) == sols);
}

TEST_CASE("solve mode reduces a recurrence inside a product") {
    MinerProblem problem;
    problem.p = 2;
    problem.lhsTerms = {term(Rat(1), {2, 0}), term(Rat(-1), {1, 0})};
    problem.budget = 1;

    const std::vector<MinerSolution> sols = mine(problem);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].rhsTerms == std::vector<MinerTerm>{term(Rat(1), {0, 0})});
    CHECK(sols[0].gridPoints == 25);
    CHECK(sols[0].confirmed == 20);
}

TEST_CASE("solve mode finds a doubled shifted term") {
    MinerProblem problem;
    problem.p = 1;
    problem.lhsTerms = {term(Rat(1), {3}), term(Rat(1), {0})};
    problem.budget = 1;

    const std::vector<MinerSolution> sols = mine(problem);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].rhsTerms == std::vector<MinerTerm>{term(Rat(2), {2})});

    // The reduction needs offset 2; a tighter window must come back empty.
    problem.offsetLo = -1;
    problem.offsetHi = 1;
    CHECK(mine(problem).empty());
}

TEST_CASE("enumerate mode agrees with solve mode on integer coefficients") {
    MinerProblem problem;
    problem.p = 1;
    problem.lhsTerms = {term(Rat(1), {3}), term(Rat(1), {0})};
    problem.budget = 1;

    const std::vector<MinerSolution> solved = mine(problem);
    problem.mode = MineMode::Enumerate;
    problem.coeffLo = -3;
    problem.coeffHi = 3;
    CHECK(mine(problem) == solved);

    // A coefficient window that excludes 2 finds nothing.
    problem.coeffLo = 0;
    problem.coeffHi = 1;
    CHECK(mine(problem).empty());
}

TEST_CASE("budget two returns every exact reduction once") {
    // F[q+3] + F[q+2] + F[q] collapses to 3*F[q+2]. With two right-hand
    // terms allowed, every pair of distinct shifts in [-3,3] carries exactly
    // one exact representation; the six pairs touching shift 2 all collapse
    // to the single term 3*F[q+2], leaving 15 genuine pairs plus that one.
    MinerProblem problem;
    problem.p = 1;
    problem.lhsTerms = {term(Rat(1), {3}), term(Rat(1), {2}), term(Rat(1), {0})};
    problem.budget = 2;

    const std::vector<MinerSolution> sols = mine(problem);
    CHECK(sols.size() == 16);

    int singles = 0;
    for (const MinerSolution& sol : sols) {
        REQUIRE(!sol.rhsTerms.empty());
        CHECK(sol.rhsTerms.size() <= 2);
        if (sol.rhsTerms.size() == 1) {
            ++singles;
            CHECK(sol.rhsTerms == std::vector<MinerTerm>{term(Rat(3), {2})});
        } else {
            CHECK(sol.rhsTerms[0].offsets < sol.rhsTerms[1].offsets);
        }
        for (const MinerTerm& t : sol.rhsTerms) CHECK(t.coeff != 0);
        // Every emitted solution must hold on a range far wider than the
        // mining grid, checked through the recurrence table.
        CHECK(holds_on_range(problem.lhsTerms, sol.rhsTerms, -40, 40));
    }
    CHECK(singles == 1);

    // Spot-check one pair worked out by hand: 9*F[q-3] + 15*F[q-2].
    const std::vector<MinerTerm> pair{term(Rat(9), {-3}), term(Rat(15), {-2})};
    int hits = 0;
    for (const MinerSolution& sol : sols) {
        if (sol.rhsTerms == pair) ++hits;
    }
    CHECK(hits == 1);
}

TEST_CASE("no reduction in range yields an empty list") {
    // F[q+2] + F[q] is the Lucas value at q+1 and is no rational multiple
    // of any single shifted term.
    MinerProblem problem;
    problem.p = 1;
    problem.lhsTerms = {term(Rat(1), {2}), term(Rat(1), {0})};
    problem.budget = 1;
    CHECK(mine(problem).empty());
}

TEST_CASE("verification counts reflect the problem settings") {
    MinerProblem problem;
    problem.p = 1;
    problem.lhsTerms = {term(Rat(1), {2}), term(Rat(-1), {1})};
    problem.budget = 1;
    problem.qLo = -1;
    problem.qHi = 3;
    problem.confirmSamples = 7;

    const std::vector<MinerSolution> sols = mine(problem);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].gridPoints == 5);
    CHECK(sols[0].confirmed == 7);
}

TEST_CASE("verify_candidate reports the first grid counterexample") {
    const std::vector<MinerTerm> lhs{term(Rat(1), {2}), term(Rat(-1), {1})};

    const MinerVerdict good = verify_candidate(lhs, {term(Rat(1), {0})}, -2, 2, 20, 1);
    CHECK(good.verified);
    CHECK(good.counterexample.empty());

    // F[q+1] matches F[q+2]-F[q+1] at q=1 but not at q=2.
    const MinerVerdict narrow = verify_candidate(lhs, {term(Rat(1), {1})}, 1, 2, 20, 1);
    CHECK(!narrow.verified);
    CHECK(narrow.counterexample == std::vector<long long>{2});

    // On the default grid the first failure sits at the low end.
    const MinerVerdict wide = verify_candidate(lhs, {term(Rat(1), {1})}, -2, 2, 20, 1);
    CHECK(!wide.verified);
    CHECK(wide.counterexample == std::vector<long long>{-2});
}

TEST_CASE("random confirmation rejects one-point-grid coincidences") {
    // F[q+1] and F[q-1] agree at q = 0 and nowhere else.
    const std::vector<MinerTerm> lhs{term(Rat(1), {1})};
    const std::vector<MinerTerm> rhs{term(Rat(1), {-1})};
    const MinerVerdict verdict = verify_candidate(lhs, rhs, 0, 0, 20, 7);
    CHECK(!verdict.verified);
    REQUIRE(verdict.counterexample.size() == 1);
    CHECK(verdict.counterexample[0] != 0);
    CHECK(fib_at(verdict.counterexample[0] + 1) != fib_at(verdict.counterexample[0] - 1));

    // The same happens through mine(): a single-point grid alone would
    // accept the coincidence, the samples kill it.
    MinerProblem problem;
    problem.p = 1;
    problem.lhsTerms = {term(Rat(2), {1}), term(Rat(-1), {1})}; // = F[q+1]
    problem.budget = 1;
    problem.offsetLo = -1;
    problem.offsetHi = -1; // only candidate: b * F[q-1]
    problem.qLo = 0;
    problem.qHi = 0;
    CHECK(mine(problem).empty());
}

TEST_CASE("mining is deterministic and cache-transparent") {
    MinerProblem problem;
    problem.p = 1;
    problem.lhsTerms = {term(Rat(1), {3}), term(Rat(1), {2}), term(Rat(1), {0})};
    problem.budget = 2;

    const std::vector<MinerSolution> first = mine(problem);
    const std::vector<MinerSolution> second = mine(problem);
    problem.useCache = false;
    const std::vector<MinerSolution> uncached = mine(problem);

    REQUIRE(first.size() == second.size());
    REQUIRE(first.size() == uncached.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].rhsTerms == second[i].rhsTerms);
        CHECK(first[i].gridPoints == second[i].gridPoints);
        CHECK(first[i].confirmed == second[i].confirmed);
        CHECK(first[i].rhsTerms == uncached[i].rhsTerms);
        CHECK(first[i].gridPoints == uncached[i].gridPoints);
        CHECK(first[i].confirmed == uncached[i].confirmed);
    }
}

TEST_CASE("left-hand expressions parse into signed product terms") {
    const std::vector<MinerTerm> recurrence =
        miner_terms_from_expr("F[q + 2] - F[q + 1]", 1);
    CHECK(recurrence ==
          std::vector<MinerTerm>{term(Rat(1), {2}), term(Rat(-1), {1})});

    const std::vector<MinerTerm> product =
        miner_terms_from_expr("F[q1 + 2] * F[q2] - F[q1 + 1] * F[q2]", 2);
    CHECK(product ==
          std::vector<MinerTerm>{term(Rat(1), {2, 0}), term(Rat(-1), {1, 0})});

    CHECK(miner_terms_from_expr("F[q + 3] + F[q]", 1) ==
          std::vector<MinerTerm>{term(Rat(1), {3}), term(Rat(1), {0})});

    CHECK(miner_terms_from_expr("-F[q] + 3 * F[q - 2]", 1) ==
          std::vector<MinerTerm>{term(Rat(-1), {0}), term(Rat(3), {-2})});

    CHECK(miner_terms_from_expr("1/2 * F[2 + q]", 1) ==
          std::vector<MinerTerm>{term(Rat(1) / 2, {2})});

    // q and q1 are interchangeable when there is a single factor.
    CHECK(miner_terms_from_expr("F[q1 - 1]", 1) ==
          std::vector<MinerTerm>{term(Rat(1), {-1})});
}

TEST_CASE("malformed left-hand expressions are rejected with the reason") {
    auto rejects = [](const std::string& text, int p, const std::string& needle) {
        try {
            miner_terms_from_expr(text, p);
            FAIL_CHECK("no error for: " << text);
        } catch (const SchemaError& e) {
            const std::string what = e.what();
            CHECK_MESSAGE(what.find(needle) != std::string::npos,
                          "message '" << what << "' lacks '" << needle << "'");
        }
    };

    rejects("F[z]", 1, "unknown index variable 'z'");
    rejects("F[q3]", 2, "unknown index variable 'q3'");
    rejects("G[q]", 1, "unsupported factor");
    rejects("F[q]^2", 1, "unsupported factor");
    rejects("F[q * 2]", 1, "not q_j plus a constant");
    rejects("F[q] * F[q + 1]", 1, "used twice");
    rejects("F[q1]", 2, "missing factor q2");
    rejects("F[q] + 1", 1, "missing factor q1");

    CHECK_THROWS_AS(miner_terms_from_expr("F[q]", 0), std::invalid_argument);
    CHECK_THROWS_AS(miner_terms_from_expr("F[q", 1), SyntaxError);
}

TEST_CASE("malformed problems are rejected") {
    MinerProblem good;
    good.p = 1;
    good.lhsTerms = {term(Rat(1), {2}), term(Rat(-1), {1})};
    good.budget = 1;
    CHECK(mine(good).size() == 1);

    auto broken = [&](auto mutate) {
        MinerProblem bad = good;
        mutate(bad);
        CHECK_THROWS_AS(mine(bad), std::invalid_argument);
    };

    broken([](MinerProblem& b) { b.p = 0; });
    broken([](MinerProblem& b) { b.lhsTerms.clear(); });
    broken([](MinerProblem& b) { b.lhsTerms[0].offsets = {1, 2}; });
    broken([](MinerProblem& b) { b.budget = 0; });
    broken([](MinerProblem& b) { b.budget = 2; }); // not below the term count
    broken([](MinerProblem& b) { b.offsetLo = 1, b.offsetHi = 0; });
    broken([](MinerProblem& b) { b.qLo = 1, b.qHi = 0; });
    broken([](MinerProblem& b) {
        b.mode = MineMode::Enumerate;
        b.coeffLo = 1, b.coeffHi = 0;
    });
    broken([](MinerProblem& b) { b.confirmSamples = -1; });

    CHECK_THROWS_AS(verify_candidate({term(Rat(1), {1})}, {term(Rat(1), {1, 2})},
                                     -2, 2, 5, 1),
                    std::invalid_argument);
}

TEST_CASE("enumerate mode reaches fractional coefficients") {
    // F[q+1] + F[q] - 1/2 * F[q+2] equals 1/2 * F[q+2]; the coefficient
    // 1/2 is only reachable through the denominator set.
    MinerProblem problem;
    problem.p = 1;
    problem.lhsTerms = {term(Rat(1), {1}), term(Rat(1), {0}),
                        term(Rat(-1) / 2, {2})};
    problem.budget = 1;
    problem.mode = MineMode::Enumerate;
    problem.coeffLo = -2;
    problem.coeffHi = 2;

    const std::vector<MinerSolution> sols = mine(problem);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].rhsTerms == std::vector<MinerTerm>{term(Rat(1) / 2, {2})});
}
