// Command-line front end for the fibsum library.
//
// Verbs: fib, identities, sum (quad|cubic), gf (quad|cubic), catalog
// (verify), mine, parse. Every verb accepts --json for machine-readable
// output. Exit codes: 0 all checks passed, 1 a verification failed,
// 2 usage or input-parsing error, 3 domain error (vanishing denominator,
// divergence, unsupported singular limit). FIBSUM_THREADS caps parallelism.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibsum/catalog.hpp"
#include "fibsum/cubic_sum.hpp"
#include "fibsum/errors.hpp"
#include "fibsum/expr.hpp"
#include "fibsum/identity_kernel.hpp"
#include "fibsum/miner.hpp"
#include "fibsum/quad_sum.hpp"
#include "fibsum/sequence.hpp"
#include "fibsum/series.hpp"

#ifndef FIBSUM_CATALOG_FILE
#define FIBSUM_CATALOG_FILE "data/catalog.json"
#endif

namespace {

using nlohmann::json;
using namespace fibsum;

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string big_str(const BigInt& b) {
    std::ostringstream os;
    os << b;
    return os.str();
}

BigInt parse_bigint(const std::string& text, const std::string& what) {
    std::size_t i = text.size() > 0 && (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument(what + ": expected an integer, got '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw std::invalid_argument(what + ": expected an integer, got '" + text + "'");
        }
    }
    BigInt value(text.substr(i));
    return text[0] == '-' ? BigInt(-value) : value;
}

Seed parse_seed(const std::string& text, const std::string& what) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument(what + ": expected 'g0,g1', got '" + text + "'");
    }
    return {parse_bigint(text.substr(0, comma), what),
            parse_bigint(text.substr(comma + 1), what)};
}

Rat parse_rat(const std::string& text, const std::string& what) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        return Rat(parse_bigint(text, what));
    }
    const BigInt num = parse_bigint(text.substr(0, slash), what);
    const BigInt den = parse_bigint(text.substr(slash + 1), what);
    if (den == 0) throw std::invalid_argument(what + ": zero denominator");
    return Rat(num) / Rat(den);
}

std::pair<long long, long long> parse_range(const std::string& text,
                                            const std::string& what) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        throw std::invalid_argument(what + ": expected 'LO..HI', got '" + text + "'");
    }
    const BigInt lo = parse_bigint(text.substr(0, dots), what);
    const BigInt hi = parse_bigint(text.substr(dots + 2), what);
    return {static_cast<long long>(lo), static_cast<long long>(hi)};
}

CubicVariant parse_variant(const std::string& name) {
    if (name == "ppp") return CubicVariant::PlusPlusPlus;
    if (name == "ppm") return CubicVariant::PlusPlusMinus;
    if (name == "pmm") return CubicVariant::PlusMinusMinus;
    if (name == "double") return CubicVariant::DoubleStep;
    throw std::invalid_argument("unknown variant '" + name +
                                "' (expected ppp, ppm, pmm or double)");
}

// ---- fib ------------------------------------------------------------------

struct FibArgs {
    long long n = 0;
    bool lucas = false;
    std::string seed;
    bool jsonOut = false;
};

int run_fib(const FibArgs& a) {
    BigInt value;
    std::string kind;
    if (!a.seed.empty()) {
        value = gen_at(parse_seed(a.seed, "--seed"), a.n);
        kind = "custom";
    } else if (a.lucas) {
        value = lucas_at(a.n);
        kind = "lucas";
    } else {
        value = fib_at(a.n);
        kind = "fibonacci";
    }
    if (a.jsonOut) {
        json out{{"n", a.n}, {"sequence", kind}, {"value", big_str(value)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << value << "\n";
    }
    return 0;
}

// ---- identities -----------------------------------------------------------

struct IdentitiesArgs {
    std::string name;
    long long grid = 2;
    bool jsonOut = false;
};

int run_identities(const IdentitiesArgs& a) {
    std::vector<GridReport> reports;
    if (!a.name.empty()) {
        const CoreIdentity* id = find_core_identity(a.name);
        if (id == nullptr) {
            throw std::invalid_argument("unknown identity '" + a.name + "'");
        }
        reports.push_back(run_identity_grid(*id, a.grid, standard_seeds()));
    } else {
        reports = run_all_identity_grids(a.grid, standard_seeds());
    }

    bool allPassed = true;
    for (const GridReport& r : reports) allPassed = allPassed && r.passed();

    if (a.jsonOut) {
        json list = json::array();
        for (const GridReport& r : reports) {
            json item{{"name", r.name},
                      {"points", r.points},
                      {"failures", r.failures},
                      {"passed", r.passed()}};
            if (!r.passed()) item["first_failure"] = r.first_failure;
            list.push_back(std::move(item));
        }
        json out{{"grid", a.grid}, {"reports", std::move(list)}, {"all_passed", allPassed}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const GridReport& r : reports) {
            std::cout << std::left << std::setw(28) << r.name << std::right
                      << std::setw(10) << r.points << "  "
                      << (r.passed() ? "PASS" : "FAIL") << "\n";
            if (!r.passed()) {
                std::cout << "    first failure: " << r.first_failure << "\n";
            }
        }
        std::cout << (allPassed ? "all identities hold" : "FAILURES present") << "\n";
    }
    return allPassed ? 0 : 1;
}

// ---- sum quad / sum cubic ---------------------------------------------------

struct QuadArgs {
    long long a = 0, b = 0, c = 0, d = 0;
    int m = 0;
    std::string x = "1";
    long long n = 0;
    std::string gseed = "0,1";
    std::string hseed = "0,1";
    bool brute = false;
    bool closed = false;
    bool jsonOut = false;
};

QuadSumSpec quad_spec(const QuadArgs& a) {
    QuadSumSpec spec;
    spec.a = a.a;
    spec.b = a.b;
    spec.c = a.c;
    spec.d = a.d;
    spec.m = a.m;
    spec.x = parse_rat(a.x, "--x");
    spec.n = a.n;
    spec.gseed = parse_seed(a.gseed, "--gseed");
    spec.hseed = parse_seed(a.hseed, "--hseed");
    return spec;
}

int report_sum(bool wantBrute, bool wantClosed, bool jsonOut,
               const std::function<Rat()>& bruteFn,
               const std::function<Rat()>& closedFn) {
    const bool both = wantBrute == wantClosed; // default: compare the two
    std::optional<Rat> brute, closed;
    if (both || wantBrute) brute = bruteFn();
    if (both || wantClosed) closed = closedFn();
    const bool mismatch = both && !(*brute == *closed);

    if (jsonOut) {
        json out;
        if (brute) out["brute"] = rat_str(*brute);
        if (closed) out["closed"] = rat_str(*closed);
        if (both) out["equal"] = !mismatch;
        std::cout << out.dump(2) << "\n";
    } else if (both) {
        std::cout << "brute  = " << *brute << "\n"
                  << "closed = " << *closed << "\n"
                  << (mismatch ? "MISMATCH" : "equal") << "\n";
    } else {
        std::cout << (brute ? *brute : *closed) << "\n";
    }
    return mismatch ? 1 : 0;
}

int run_sum_quad(const QuadArgs& a) {
    const QuadSumSpec spec = quad_spec(a);
    return report_sum(a.brute, a.closed, a.jsonOut,
                      [&] { return quad_sum_brute(spec); },
                      [&] { return quad_sum_eval(spec); });
}

struct CubicArgs {
    std::string variant = "ppp";
    long long p = 0, q = 0, r = 0;
    std::string x = "1";
    long long n = 0;
    std::string gseed = "0,1";
    std::string hseed = "0,1";
    std::string kseed = "0,1";
    bool brute = false;
    bool closed = false;
    bool jsonOut = false;
};

CubicSumSpec cubic_spec(const CubicArgs& a) {
    CubicSumSpec spec;
    spec.variant = parse_variant(a.variant);
    spec.p = a.p;
    spec.q = a.q;
    spec.r = a.r;
    spec.x = parse_rat(a.x, "--x");
    spec.n = a.n;
    spec.gseed = parse_seed(a.gseed, "--gseed");
    spec.hseed = parse_seed(a.hseed, "--hseed");
    spec.kseed = parse_seed(a.kseed, "--kseed");
    return spec;
}

int run_sum_cubic(const CubicArgs& a) {
    const CubicSumSpec spec = cubic_spec(a);
    return report_sum(a.brute, a.closed, a.jsonOut,
                      [&] { return cubic_sum_brute(spec); },
                      [&] { return cubic_sum_closed(spec); });
}

// ---- gf quad / gf cubic -----------------------------------------------------

struct GfQuadArgs {
    QuadArgs base;
    long long checkN = -1;
    bool check = false;
};

int run_gf_quad(const GfQuadArgs& a) {
    QuadSumSpec spec = quad_spec(a.base);
    const Rat value = quad_series(spec);

    json out{{"value", rat_str(value)}};
    if (!a.base.jsonOut) std::cout << "value = " << value << "\n";
    if (a.check) {
        spec.n = a.checkN;
        const Rat partial = quad_sum_brute(spec);
        const Rat residual = value - partial;
        if (a.base.jsonOut) {
            out["check_n"] = a.checkN;
            out["partial"] = rat_str(partial);
            out["residual"] = rat_str(residual);
        } else {
            std::cout << "partial(n=" << a.checkN << ") = " << partial << "\n"
                      << "residual = " << residual << "\n";
        }
    }
    if (a.base.jsonOut) std::cout << out.dump(2) << "\n";
    return 0;
}

struct GfCubicArgs {
    CubicArgs base;
    long long checkN = -1;
    bool check = false;
};

int run_gf_cubic(const GfCubicArgs& a) {
    CubicSumSpec spec = cubic_spec(a.base);
    const Rat value = cubic_gf(spec);

    json out{{"value", rat_str(value)}};
    if (!a.base.jsonOut) std::cout << "value = " << value << "\n";
    if (a.check) {
        spec.n = a.checkN;
        const Rat partial = cubic_sum_brute(spec);
        const Rat residual = value - partial;
        if (a.base.jsonOut) {
            out["check_n"] = a.checkN;
            out["partial"] = rat_str(partial);
            out["residual"] = rat_str(residual);
        } else {
            std::cout << "partial(n=" << a.checkN << ") = " << partial << "\n"
                      << "residual = " << residual << "\n";
        }
    }
    if (a.base.jsonOut) std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- catalog verify ---------------------------------------------------------

struct CatalogArgs {
    std::string file = FIBSUM_CATALOG_FILE;
    int grid = 1;
    std::string id;
    bool jsonOut = false;
};

int run_catalog_verify(const CatalogArgs& a) {
    std::vector<IdentityRecord> records = load_catalog(a.file);
    if (!a.id.empty()) {
        records = {find_record(records, a.id)};
    }
    const VerifyReport report = catalog_verify(records, a.grid);

    if (a.jsonOut) {
        json list = json::array();
        for (const RecordReport& r : report.records) {
            json item{{"id", r.id},
                      {"checked", r.checked},
                      {"skipped", r.skipped},
                      {"passed", r.passed}};
            if (!r.passed) item["first_failure"] = r.first_failure;
            list.push_back(std::move(item));
        }
        json out{{"file", a.file},
                 {"grid", a.grid},
                 {"records", std::move(list)},
                 {"total_checked", report.total_checked()},
                 {"all_passed", report.all_passed()}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const RecordReport& r : report.records) {
            std::cout << std::left << std::setw(8) << r.id << std::right
                      << std::setw(10) << r.checked << " checked "
                      << std::setw(8) << r.skipped << " skipped  "
                      << (r.passed ? "PASS" : "FAIL") << "\n";
            if (!r.passed) {
                std::cout << "    first failure: " << r.first_failure << "\n";
            }
        }
        std::cout << report.records.size() << " records, "
                  << report.total_checked() << " points checked: "
                  << (report.all_passed() ? "all passed" : "FAILURES present")
                  << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

// ---- mine -------------------------------------------------------------------

struct MineArgs {
    int p = 1;
    std::string lhs;
    int budget = 1;
    std::string offsets = "-3..3";
    std::string grid = "-2..2";
    std::string mode = "solve";
    std::string coeffs = "-3..3";
    int samples = 20;
    unsigned long long rngSeed = 123456789ULL;
    bool jsonOut = false;
};

std::string term_str(const MinerTerm& t, int p) {
    std::ostringstream os;
    os << t.coeff << " * ";
    for (int j = 0; j < p; ++j) {
        if (j > 0) os << " * ";
        os << "F[q";
        if (p > 1) os << (j + 1);
        const long long off = t.offsets[static_cast<std::size_t>(j)];
        if (off > 0) os << " + " << off;
        if (off < 0) os << " - " << -off;
        os << "]";
    }
    return os.str();
}

int run_mine(const MineArgs& a) {
    MinerProblem problem;
    problem.p = a.p;
    problem.lhsTerms = miner_terms_from_expr(a.lhs, a.p);
    problem.budget = a.budget;
    std::tie(problem.offsetLo, problem.offsetHi) = parse_range(a.offsets, "--offsets");
    std::tie(problem.qLo, problem.qHi) = parse_range(a.grid, "--grid");
    if (a.mode == "solve") {
        problem.mode = MineMode::Solve;
    } else if (a.mode == "enum") {
        problem.mode = MineMode::Enumerate;
    } else {
        throw std::invalid_argument("unknown mode '" + a.mode +
                                    "' (expected solve or enum)");
    }
    std::tie(problem.coeffLo, problem.coeffHi) = parse_range(a.coeffs, "--coeffs");
    problem.confirmSamples = a.samples;
    problem.rngSeed = a.rngSeed;

    const std::vector<MinerSolution> solutions = mine(problem);

    if (a.jsonOut) {
        json list = json::array();
        for (const MinerSolution& sol : solutions) {
            json terms = json::array();
            for (const MinerTerm& t : sol.rhsTerms) {
                terms.push_back(json{{"coeff", rat_str(t.coeff)},
                                     {"offsets", t.offsets}});
            }
            list.push_back(json{{"terms", std::move(terms)},
                                {"grid_points", sol.gridPoints},
                                {"confirmed", sol.confirmed}});
        }
        json out{{"lhs", a.lhs}, {"solutions", std::move(list)}};
        std::cout << out.dump(2) << "\n";
    } else if (solutions.empty()) {
        std::cout << "no reduction found within the given ranges\n";
    } else {
        for (const MinerSolution& sol : solutions) {
            std::ostringstream line;
            for (std::size_t i = 0; i < sol.rhsTerms.size(); ++i) {
                if (i > 0) line << " + ";
                line << term_str(sol.rhsTerms[i], a.p);
            }
            std::cout << std::left << std::setw(48) << line.str()
                      << "  grid=" << sol.gridPoints
                      << " confirmed=" << sol.confirmed << "\n";
        }
    }
    return 0;
}

// ---- parse ------------------------------------------------------------------

struct ParseArgs {
    std::string text;
    bool checkOnly = false;
    bool jsonOut = false;
};

int run_parse(const ParseArgs& a) {
    const ExprPtr ast = parse(a.text);
    if (a.jsonOut) {
        json out{{"ok", true}};
        if (!a.checkOnly) out["canonical"] = print(ast);
        std::cout << out.dump(2) << "\n";
    } else if (!a.checkOnly) {
        std::cout << print(ast) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluator, verifier and miner for Fibonacci-family "
                 "summation identities"};
    app.require_subcommand(1);

    FibArgs fibArgs;
    CLI::App* fib = app.add_subcommand("fib", "Print one sequence value");
    fib->add_option("n", fibArgs.n, "Index (may be negative)")->required();
    CLI::Option* lucasFlag =
        fib->add_flag("--lucas", fibArgs.lucas, "Lucas numbers instead of Fibonacci");
    fib->add_option("--seed", fibArgs.seed, "Seed g0,g1 of a generalized sequence")
        ->excludes(lucasFlag);
    fib->add_flag("--json", fibArgs.jsonOut, "JSON output");

    IdentitiesArgs idArgs;
    CLI::App* identities =
        app.add_subcommand("identities", "Check the core product identities on a grid");
    identities->add_option("--name", idArgs.name, "Check a single identity by name");
    identities->add_option("--grid", idArgs.grid,
                           "Variables range over [-R, R] (default 2)");
    identities->add_flag("--json", idArgs.jsonOut, "JSON output");

    CLI::App* sum = app.add_subcommand("sum", "Evaluate finite weighted sums");
    sum->require_subcommand(1);
    QuadArgs quadArgs;
    CLI::App* sumQuad = sum->add_subcommand(
        "quad", "sum(k = 0..n, x^k * k^m * G[a + b*k] * H[c + d*k])");
    sumQuad->add_option("--a", quadArgs.a, "Offset a");
    sumQuad->add_option("--b", quadArgs.b, "Step b");
    sumQuad->add_option("--c", quadArgs.c, "Offset c");
    sumQuad->add_option("--d", quadArgs.d, "Step d");
    sumQuad->add_option("--m", quadArgs.m, "Power of k (0..5)");
    sumQuad->add_option("--x", quadArgs.x, "Weight base, P or P/Q (use --x=-1/5)");
    sumQuad->add_option("--n", quadArgs.n, "Upper summation limit");
    sumQuad->add_option("--gseed", quadArgs.gseed, "Seed g0,g1 for G (default 0,1)");
    sumQuad->add_option("--hseed", quadArgs.hseed, "Seed h0,h1 for H (default 0,1)");
    CLI::Option* qb = sumQuad->add_flag("--brute", quadArgs.brute, "Brute force only");
    CLI::Option* qc = sumQuad->add_flag("--closed", quadArgs.closed, "Closed form only");
    sumQuad->add_flag("--both", "Evaluate both and compare (default)")
        ->excludes(qb)
        ->excludes(qc);
    qb->excludes(qc);
    sumQuad->add_flag("--json", quadArgs.jsonOut, "JSON output");

    CubicArgs cubicArgs;
    CLI::App* sumCubic = sum->add_subcommand(
        "cubic", "sum(k = 0..n, x^k * G * H * K) with a variant index pattern");
    sumCubic->add_option("--variant", cubicArgs.variant,
                         "ppp, ppm, pmm or double (default ppp)");
    sumCubic->add_option("--p", cubicArgs.p, "Offset p");
    sumCubic->add_option("--q", cubicArgs.q, "Offset q");
    sumCubic->add_option("--r", cubicArgs.r, "Offset r");
    sumCubic->add_option("--x", cubicArgs.x, "Weight base, P or P/Q");
    sumCubic->add_option("--n", cubicArgs.n, "Upper summation limit");
    sumCubic->add_option("--gseed", cubicArgs.gseed, "Seed for G (default 0,1)");
    sumCubic->add_option("--hseed", cubicArgs.hseed, "Seed for H (default 0,1)");
    sumCubic->add_option("--kseed", cubicArgs.kseed, "Seed for K (default 0,1)");
    CLI::Option* cb = sumCubic->add_flag("--brute", cubicArgs.brute, "Brute force only");
    CLI::Option* cc = sumCubic->add_flag("--closed", cubicArgs.closed, "Closed form only");
    sumCubic->add_flag("--both", "Evaluate both and compare (default)")
        ->excludes(cb)
        ->excludes(cc);
    cb->excludes(cc);
    sumCubic->add_flag("--json", cubicArgs.jsonOut, "JSON output");

    CLI::App* gf = app.add_subcommand("gf", "Evaluate infinite series exactly");
    gf->require_subcommand(1);
    GfQuadArgs gfQuadArgs;
    CLI::App* gfQuad = gf->add_subcommand(
        "quad", "sum(k >= 0, x^k * k^m * G[a + b*k] * H[c + d*k])");
    gfQuad->add_option("--a", gfQuadArgs.base.a, "Offset a");
    gfQuad->add_option("--b", gfQuadArgs.base.b, "Step b");
    gfQuad->add_option("--c", gfQuadArgs.base.c, "Offset c");
    gfQuad->add_option("--d", gfQuadArgs.base.d, "Step d");
    gfQuad->add_option("--m", gfQuadArgs.base.m, "Power of k (0..5)");
    gfQuad->add_option("--x", gfQuadArgs.base.x, "Weight base, P or P/Q");
    gfQuad->add_option("--gseed", gfQuadArgs.base.gseed, "Seed for G");
    gfQuad->add_option("--hseed", gfQuadArgs.base.hseed, "Seed for H");
    CLI::Option* gfQuadCheck =
        gfQuad->add_option("--check", gfQuadArgs.checkN,
                           "Also print the partial sum to n = N and the residual");
    gfQuad->add_flag("--json", gfQuadArgs.base.jsonOut, "JSON output");

    GfCubicArgs gfCubicArgs;
    CLI::App* gfCubic = gf->add_subcommand(
        "cubic", "sum(k >= 0, x^k * G * H * K) with a variant index pattern");
    gfCubic->add_option("--variant", gfCubicArgs.base.variant,
                        "ppp, ppm, pmm or double (default ppp)");
    gfCubic->add_option("--p", gfCubicArgs.base.p, "Offset p");
    gfCubic->add_option("--q", gfCubicArgs.base.q, "Offset q");
    gfCubic->add_option("--r", gfCubicArgs.base.r, "Offset r");
    gfCubic->add_option("--x", gfCubicArgs.base.x, "Weight base, P or P/Q");
    gfCubic->add_option("--gseed", gfCubicArgs.base.gseed, "Seed for G");
    gfCubic->add_option("--hseed", gfCubicArgs.base.hseed, "Seed for H");
    gfCubic->add_option("--kseed", gfCubicArgs.base.kseed, "Seed for K");
    CLI::Option* gfCubicCheck =
        gfCubic->add_option("--check", gfCubicArgs.checkN,
                            "Also print the partial sum to n = N and the residual");
    gfCubic->add_flag("--json", gfCubicArgs.base.jsonOut, "JSON output");

    CLI::App* catalog = app.add_subcommand("catalog", "Work with the identity catalog");
    catalog->require_subcommand(1);
    CatalogArgs catalogArgs;
    CLI::App* catalogVerify =
        catalog->add_subcommand("verify", "Re-verify catalog records by brute force");
    catalogVerify->add_option("--file", catalogArgs.file,
                              "Catalog path (default: the shipped catalog)");
    catalogVerify->add_option(
        "--grid", catalogArgs.grid,
        "n in [0, 2R+4], other variables in [-R, R]; negative R uses each "
        "record's declared ranges (default 1)");
    catalogVerify->add_option("--id", catalogArgs.id,
                              "Verify a single record, e.g. 11.07");
    catalogVerify->add_flag("--json", catalogArgs.jsonOut, "JSON output");

    MineArgs mineArgs;
    CLI::App* mineCmd = app.add_subcommand(
        "mine", "Search for shorter combinations of shifted Fibonacci products");
    mineCmd->add_option("--p", mineArgs.p, "Factors per product (default 1)");
    mineCmd->add_option("--lhs", mineArgs.lhs,
                        "Left-hand side, e.g. \"F[q + 2] - F[q + 1]\"")
        ->required();
    mineCmd->add_option("--budget", mineArgs.budget,
                        "Right-hand term budget (default 1)");
    mineCmd->add_option("--offsets", mineArgs.offsets,
                        "Candidate offset range LO..HI (default -3..3)");
    mineCmd->add_option("--grid", mineArgs.grid,
                        "Verification grid LO..HI per q_j (default -2..2)");
    mineCmd->add_option("--mode", mineArgs.mode, "solve or enum (default solve)");
    mineCmd->add_option("--coeffs", mineArgs.coeffs,
                        "Numerator range LO..HI for enum mode (default -3..3)");
    mineCmd->add_option("--samples", mineArgs.samples,
                        "Random confirmation samples (default 20)");
    mineCmd->add_option("--rng-seed", mineArgs.rngSeed,
                        "Seed for confirmation sampling");
    mineCmd->add_flag("--json", mineArgs.jsonOut, "JSON output");

    ParseArgs parseArgs;
    CLI::App* parseCmd =
        app.add_subcommand("parse", "Parse an expression and print its canonical form");
    parseCmd->add_option("expr", parseArgs.text, "Expression text")->required();
    parseCmd->add_flag("--check", parseArgs.checkOnly,
                       "Validate only; print nothing on success");
    parseCmd->add_flag("--json", parseArgs.jsonOut, "JSON output");

    try {
        app.parse(argc, argv);
        gfQuadArgs.check = gfQuadCheck->count() > 0;
        gfCubicArgs.check = gfCubicCheck->count() > 0;

        if (*fib) return run_fib(fibArgs);
        if (*identities) return run_identities(idArgs);
        if (*sumQuad) return run_sum_quad(quadArgs);
        if (*sumCubic) return run_sum_cubic(cubicArgs);
        if (*gfQuad) return run_gf_quad(gfQuadArgs);
        if (*gfCubic) return run_gf_cubic(gfCubicArgs);
        if (*catalogVerify) return run_catalog_verify(catalogArgs);
        if (*mineCmd) return run_mine(mineArgs);
        if (*parseCmd) return run_parse(parseArgs);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownRecord& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
