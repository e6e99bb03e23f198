#include "fibsum/miner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fibsum/errors.hpp"
#include "fibsum/expr.hpp"
#include "fibsum/parallel.hpp"
#include "fibsum/sequence.hpp"

namespace fibsum {

bool operator<(const MinerTerm& a, const MinerTerm& b) {
    if (a.offsets != b.offsets) return a.offsets < b.offsets;
    return a.coeff < b.coeff;
}

bool operator<(const MinerSolution& a, const MinerSolution& b) {
    return a.rhsTerms < b.rhsTerms;
}

bool operator==(const MinerSolution& a, const MinerSolution& b) {
    return a.rhsTerms == b.rhsTerms;
}

namespace {

// All points of [lo, hi]^p in lexicographic order, first coordinate slowest.
std::vector<std::vector<long long>> lattice(int p, long long lo, long long hi) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> q(static_cast<std::size_t>(p), lo);
    while (true) {
        out.push_back(q);
        int j = p - 1;
        while (j >= 0 && q[static_cast<std::size_t>(j)] == hi) {
            q[static_cast<std::size_t>(j)] = lo;
            --j;
        }
        if (j < 0) break;
        ++q[static_cast<std::size_t>(j)];
    }
    return out;
}

// Term-list value at one q point, every Fibonacci factor through fast
// doubling. This is the confirmation path; it must stay cache-free.
Rat direct_value(const std::vector<MinerTerm>& terms, const std::vector<long long>& q) {
    Rat total(0);
    for (const MinerTerm& term : terms) {
        Rat v = term.coeff;
        for (std::size_t j = 0; j < q.size(); ++j) {
            v *= Rat(fib_at(q[j] + term.offsets[j]));
        }
        total += v;
    }
    return total;
}

// Sorts, merges equal offset vectors, and drops zero coefficients.
std::vector<MinerTerm> canonicalize(std::vector<MinerTerm> terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<MinerTerm> out;
    for (MinerTerm& term : terms) {
        if (!out.empty() && out.back().offsets == term.offsets) {
            out.back().coeff += term.coeff;
        } else {
            out.push_back(std::move(term));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const MinerTerm& t) { return t.coeff == 0; }),
              out.end());
    return out;
}

// Exact Gaussian elimination for A b = y with the columns given; returns the
// coefficient vector only when the system is consistent and the solution is
// unique (full column rank). Anything else is rejected: a free column means
// the same combination is reachable with fewer terms.
std::optional<std::vector<Rat>> solve_exact(const std::vector<const std::vector<Rat>*>& columns,
                                            const std::vector<Rat>& y) {
    const std::size_t rows = y.size();
    const std::size_t cols = columns.size();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = (*columns[c])[r];
        a[r][cols] = y[r];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivotRow(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) return std::nullopt; // free column
        std::swap(a[pivot], a[row]);
        const Rat lead = a[row][c];
        for (std::size_t j = c; j <= cols; ++j) a[row][j] /= lead;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][c] == 0) continue;
            const Rat f = a[r][c];
            for (std::size_t j = c; j <= cols; ++j) a[r][j] -= f * a[row][j];
        }
        pivotRow[c] = row;
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r) {
        if (a[r][cols] != 0) return std::nullopt; // inconsistent
    }
    std::vector<Rat> b(cols);
    for (std::size_t c = 0; c < cols; ++c) b[c] = a[pivotRow[c]][cols];
    return b;
}

// Coefficient values tried in Enumerate mode: numerators in [lo, hi] over
// the denominators 1, 2, 4, 5, 10, 20, 25.
std::vector<Rat> enumerate_values(long long lo, long long hi) {
    static const long long dens[] = {1, 2, 4, 5, 10, 20, 25};
    std::set<Rat> values;
    for (long long num = lo; num <= hi; ++num) {
        for (long long den : dens) values.insert(Rat(num) / den);
    }
    return {values.begin(), values.end()};
}

void validate(const MinerProblem& problem) {
    auto bad = [](const std::string& why) { throw std::invalid_argument(why); };
    if (problem.p < 1) bad("factor count p must be >= 1");
    if (problem.lhsTerms.empty()) bad("left-hand side needs at least one term");
    for (const MinerTerm& t : problem.lhsTerms) {
        if (t.offsets.size() != static_cast<std::size_t>(problem.p)) {
            bad("every left-hand term needs exactly p offsets");
        }
    }
    if (problem.budget < 1) bad("term budget must be >= 1");
    if (static_cast<std::size_t>(problem.budget) >= problem.lhsTerms.size()) {
        bad("term budget must be smaller than the left-hand term count");
    }
    if (problem.offsetLo > problem.offsetHi) bad("empty offset range");
    if (problem.qLo > problem.qHi) bad("empty verification grid");
    if (problem.coeffLo > problem.coeffHi && problem.mode == MineMode::Enumerate) {
        bad("empty coefficient range");
    }
    if (problem.confirmSamples < 0) bad("negative confirmation sample count");
}

} // namespace

std::vector<Rat> eval_product_vector(const std::vector<long long>& offsets,
                                     long long qLo, long long qHi) {
    Sequence fib(FIB_SEED);
    std::vector<Rat> out;
    for (const std::vector<long long>& q :
         lattice(static_cast<int>(offsets.size()), qLo, qHi)) {
        Rat v(1);
        for (std::size_t j = 0; j < offsets.size(); ++j) {
            v *= Rat(fib.at(q[j] + offsets[j]));
        }
        out.push_back(std::move(v));
    }
    return out;
}

MinerVerdict verify_candidate(const std::vector<MinerTerm>& lhs,
                              const std::vector<MinerTerm>& rhs, long long qLo,
                              long long qHi, int confirmSamples,
                              unsigned long long rngSeed) {
    const std::size_t p = lhs.empty() ? 1 : lhs.front().offsets.size();
    for (const MinerTerm& t : lhs) {
        if (t.offsets.size() != p) {
            throw std::invalid_argument("verify_candidate: inconsistent offset arity");
        }
    }
    for (const MinerTerm& t : rhs) {
        if (t.offsets.size() != p) {
            throw std::invalid_argument("verify_candidate: inconsistent offset arity");
        }
    }
    for (const std::vector<long long>& q : lattice(static_cast<int>(p), qLo, qHi)) {
        if (direct_value(lhs, q) != direct_value(rhs, q)) {
            return {false, q};
        }
    }
    std::mt19937_64 rng(rngSeed);
    std::uniform_int_distribution<long long> dist(-40, 40);
    for (int s = 0; s < confirmSamples; ++s) {
        std::vector<long long> q(p);
        for (std::size_t j = 0; j < p; ++j) q[j] = dist(rng);
        if (direct_value(lhs, q) != direct_value(rhs, q)) {
            return {false, q};
        }
    }
    return {true, {}};
}

std::vector<MinerSolution> mine(const MinerProblem& problem) {
    validate(problem);
    const auto grid = lattice(problem.p, problem.qLo, problem.qHi);
    const std::size_t gridPoints = grid.size();

    // Target values: the left-hand side at every grid point.
    Sequence fib(FIB_SEED);
    std::vector<Rat> y(gridPoints, Rat(0));
    for (std::size_t g = 0; g < gridPoints; ++g) {
        for (const MinerTerm& term : problem.lhsTerms) {
            Rat v = term.coeff;
            for (std::size_t j = 0; j < grid[g].size(); ++j) {
                v *= Rat(fib.at(grid[g][j] + term.offsets[j]));
            }
            y[g] += v;
        }
    }

    // Candidate shift vectors, lexicographic.
    const auto shifts = lattice(problem.p, problem.offsetLo, problem.offsetHi);

    // The shared product cache: column c = products for shifts[c] at every
    // grid point. With the cache disabled the columns are recomputed at each
    // use; results must be identical either way.
    std::vector<std::vector<Rat>> cache;
    if (problem.useCache) {
        cache.resize(shifts.size());
        for (std::size_t c = 0; c < shifts.size(); ++c) {
            cache[c] = eval_product_vector(shifts[c], problem.qLo, problem.qHi);
        }
    }

    // Nondecreasing index tuples of length `budget` over the shift list.
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> pick(static_cast<std::size_t>(problem.budget), 0);
    while (true) {
        candidates.push_back(pick);
        int slot = problem.budget - 1;
        while (slot >= 0 && pick[static_cast<std::size_t>(slot)] == shifts.size() - 1) {
            --slot;
        }
        if (slot < 0) break;
        const std::size_t next = pick[static_cast<std::size_t>(slot)] + 1;
        for (std::size_t s = static_cast<std::size_t>(slot); s < pick.size(); ++s) {
            pick[s] = next;
        }
    }

    const std::vector<Rat> coeffValues =
        problem.mode == MineMode::Enumerate
            ? enumerate_values(problem.coeffLo, problem.coeffHi)
            : std::vector<Rat>{};

    std::vector<std::vector<MinerSolution>> found(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t idx) {
        const std::vector<std::size_t>& columnsIdx = candidates[idx];

        std::vector<std::vector<Rat>> local; // used when the cache is off
        std::vector<const std::vector<Rat>*> columns;
        for (std::size_t c : columnsIdx) {
            if (problem.useCache) {
                columns.push_back(&cache[c]);
            } else {
                local.push_back(eval_product_vector(shifts[c], problem.qLo, problem.qHi));
            }
        }
        if (!problem.useCache) {
            for (const auto& col : local) columns.push_back(&col);
        }

        std::vector<std::vector<Rat>> coefficientSets;
        if (problem.mode == MineMode::Solve) {
            if (auto b = solve_exact(columns, y)) {
                coefficientSets.push_back(std::move(*b));
            }
        } else {
            // Try every coefficient tuple; early-exit per grid point.
            std::vector<std::size_t> at(columnsIdx.size(), 0);
            bool done = false;
            while (!done) {
                bool match = true;
                for (std::size_t g = 0; g < gridPoints && match; ++g) {
                    Rat v(0);
                    for (std::size_t c = 0; c < columnsIdx.size(); ++c) {
                        v += coeffValues[at[c]] * (*columns[c])[g];
                    }
                    match = v == y[g];
                }
                if (match) {
                    std::vector<Rat> b;
                    for (std::size_t c = 0; c < columnsIdx.size(); ++c) {
                        b.push_back(coeffValues[at[c]]);
                    }
                    coefficientSets.push_back(std::move(b));
                }
                done = true;
                for (std::size_t slot = at.size(); slot-- > 0;) {
                    if (++at[slot] < coeffValues.size()) {
                        done = false;
                        break;
                    }
                    at[slot] = 0;
                }
            }
        }

        for (const std::vector<Rat>& b : coefficientSets) {
            std::vector<MinerTerm> terms;
            for (std::size_t c = 0; c < columnsIdx.size(); ++c) {
                terms.push_back({b[c], shifts[columnsIdx[c]]});
            }
            terms = canonicalize(terms);
            if (terms.empty()) continue;
            // Accept only after the independent, cache-free re-check. The
            // per-candidate seed keeps sampling deterministic no matter how
            // candidates are scheduled across workers.
            const unsigned long long seed =
                problem.rngSeed + 0x9E3779B97F4A7C15ULL * (idx + 1);
            const MinerVerdict verdict =
                verify_candidate(problem.lhsTerms, terms, problem.qLo, problem.qHi,
                                 problem.confirmSamples, seed);
            if (verdict.verified) {
                found[idx].push_back({std::move(terms),
                                      static_cast<long long>(gridPoints),
                                      problem.confirmSamples});
            }
        }
    });

    std::vector<MinerSolution> solutions;
    std::set<std::vector<MinerTerm>> seen;
    for (const std::vector<MinerSolution>& batch : found) {
        for (const MinerSolution& sol : batch) {
            if (seen.insert(sol.rhsTerms).second) solutions.push_back(sol);
        }
    }
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

std::vector<MinerTerm> miner_terms_from_expr(const std::string& text, int p) {
    if (p < 1) throw std::invalid_argument("factor count p must be >= 1");
    const ExprPtr root = parse(text);

    // Flatten the top-level +/- chain into signed summands.
    std::vector<std::pair<int, const Expr*>> summands;
    std::vector<std::pair<int, const Expr*>> stack{{1, root.get()}};
    while (!stack.empty()) {
        auto [sign, e] = stack.back();
        stack.pop_back();
        if (e->kind == ExprKind::Add) {
            stack.push_back({sign, e->args[0].get()});
            stack.push_back({sign, e->args[1].get()});
        } else if (e->kind == ExprKind::Sub) {
            stack.push_back({sign, e->args[0].get()});
            stack.push_back({-sign, e->args[1].get()});
        } else {
            summands.push_back({sign, e});
        }
    }
    std::reverse(summands.begin(), summands.end()); // restore source order

    auto fail = [&](const std::string& why) {
        throw SchemaError("left-hand side: " + why);
    };

    // Index expressions must be q_j + constant; returns (j, shift).
    auto read_index = [&](const Expr& idx) -> std::pair<int, long long> {
        long long shift = 0;
        const Expr* e = &idx;
        // Peel constant +/- layers around the variable.
        while (e->kind == ExprKind::Add || e->kind == ExprKind::Sub) {
            const int s = e->kind == ExprKind::Sub ? -1 : 1;
            const Expr* lhs = e->args[0].get();
            const Expr* rhs = e->args[1].get();
            if (rhs->kind == ExprKind::Literal && denominator(rhs->value) == 1) {
                shift += s * to_ll(numerator(rhs->value), "index shift");
                e = lhs;
            } else if (lhs->kind == ExprKind::Literal && s == 1 &&
                       denominator(lhs->value) == 1) {
                shift += to_ll(numerator(lhs->value), "index shift");
                e = rhs;
            } else {
                fail("index '" + print(idx) + "' is not q_j plus a constant");
            }
        }
        if (e->kind != ExprKind::Symbol) {
            fail("index '" + print(idx) + "' is not q_j plus a constant");
        }
        const std::string& name = e->name;
        if (p == 1 && (name == "q" || name == "q1")) return {0, shift};
        if (name.size() >= 2 && name[0] == 'q') {
            int j = 0;
            for (std::size_t i = 1; i < name.size(); ++i) {
                if (name[i] < '0' || name[i] > '9') fail("unknown index variable '" + name + "'");
                j = j * 10 + (name[i] - '0');
            }
            if (j >= 1 && j <= p) return {j - 1, shift};
        }
        fail("unknown index variable '" + name + "'");
        return {};
    };

    std::vector<MinerTerm> out;
    for (const auto& [sign, top] : summands) {
        MinerTerm term;
        term.coeff = Rat(sign);
        term.offsets.assign(static_cast<std::size_t>(p), 0);
        std::vector<bool> seenFactor(static_cast<std::size_t>(p), false);

        std::vector<const Expr*> factors{top};
        while (!factors.empty()) {
            const Expr* e = factors.back();
            factors.pop_back();
            if (e->kind == ExprKind::Mul) {
                factors.push_back(e->args[0].get());
                factors.push_back(e->args[1].get());
            } else if (e->kind == ExprKind::Neg) {
                term.coeff = -term.coeff;
                factors.push_back(e->args[0].get());
            } else if (e->kind == ExprKind::Literal) {
                term.coeff *= e->value;
            } else if (e->kind == ExprKind::SeqRef && e->name == "F") {
                const auto [j, shift] = read_index(*e->args[0]);
                if (seenFactor[static_cast<std::size_t>(j)]) {
                    fail("factor position " + std::to_string(j + 1) + " used twice in '" +
                         print(*top) + "'");
                }
                seenFactor[static_cast<std::size_t>(j)] = true;
                term.offsets[static_cast<std::size_t>(j)] = shift;
            } else {
                fail("unsupported factor '" + print(*e) + "'");
            }
        }
        for (int j = 0; j < p; ++j) {
            if (!seenFactor[static_cast<std::size_t>(j)]) {
                fail("term '" + print(*top) + "' is missing factor q" + std::to_string(j + 1));
            }
        }
        out.push_back(std::move(term));
    }
    return out;
}

} // namespace fibsum
