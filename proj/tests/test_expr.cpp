#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "fibsum/errors.hpp"
#include "fibsum/expr.hpp"
#include "fibsum/quad_sum.hpp"

using namespace fibsum;

namespace {

ExprPtr sym(const char* s) { return make_sym(s); }

ExprPtr add(ExprPtr a, ExprPtr b) { return make_add(std::move(a), std::move(b)); }

// Convenience: SEQ[base + k] with integer-symbol parts.
ExprPtr seq_at(char letter, ExprPtr idx) { return make_seq(letter, std::move(idx)); }

EvalContext ctx_with(std::initializer_list<std::pair<const char*, long long>> ints) {
    EvalContext ctx;
    for (const auto& [name, v] : ints) {
        ctx.ints[name] = v;
    }
    return ctx;
}

} // namespace

TEST_CASE("parser builds the documented ASTs") {
    // G[p+k]*H[q+k]
    const ExprPtr prod = parse("G[p+k]*H[q+k]");
    const ExprPtr prodExpected =
        make_mul(seq_at('G', add(sym("p"), sym("k"))),
                 seq_at('H', add(sym("q"), sym("k"))));
    CHECK(*prod == *prodExpected);

    // sum(k=0..n, x^k * k^2 * G[a+b*k]*H[c+d*k])
    const ExprPtr sum = parse("sum(k=0..n, x^k * k^2 * G[a+b*k]*H[c+d*k])");
    const ExprPtr body = make_mul(
        make_mul(make_mul(make_pow(sym("x"), sym("k")),
                          make_pow(sym("k"), make_lit(2))),
                 seq_at('G', add(sym("a"), make_mul(sym("b"), sym("k"))))),
        seq_at('H', add(sym("c"), make_mul(sym("d"), sym("k")))));
    const ExprPtr sumExpected = make_sum("k", make_lit(0), sym("n"), body);
    CHECK(*sum == *sumExpected);

    // 1/2 * (G[p+n]*H[q+n+1] + G[p+n+1]*H[q+n] - G[p-1]*H[q] - G[p]*H[q-1])
    const ExprPtr half = parse(
        "1/2 * (G[p+n]*H[q+n+1] + G[p+n+1]*H[q+n] - G[p-1]*H[q] - G[p]*H[q-1])");
    const ExprPtr m1 = make_mul(seq_at('G', add(sym("p"), sym("n"))),
                                seq_at('H', add(add(sym("q"), sym("n")), make_lit(1))));
    const ExprPtr m2 = make_mul(seq_at('G', add(add(sym("p"), sym("n")), make_lit(1))),
                                seq_at('H', add(sym("q"), sym("n"))));
    const ExprPtr m3 = make_mul(seq_at('G', make_sub(sym("p"), make_lit(1))),
                                seq_at('H', sym("q")));
    const ExprPtr m4 = make_mul(seq_at('G', sym("p")),
                                seq_at('H', make_sub(sym("q"), make_lit(1))));
    const ExprPtr halfExpected = make_mul(
        make_lit(make_rat(1, 2)), make_sub(make_sub(add(m1, m2), m3), m4));
    CHECK(*half == *halfExpected);
}

TEST_CASE("precedence and associativity") {
    const ExprPtr a = sym("a");
    const ExprPtr b = sym("b");
    const ExprPtr c = sym("c");

    CHECK(*parse("a - b - c") == *make_sub(make_sub(a, b), c));
    CHECK(*parse("a - (b - c)") == *make_sub(a, make_sub(b, c)));
    CHECK(*parse("a + b * c") == *add(a, make_mul(b, c)));
    CHECK(*parse("(a + b) * c") == *make_mul(add(a, b), c));
    CHECK(*parse("a * b + c") == *add(make_mul(a, b), c));

    // '^' is right-associative and binds between '*' and atoms.
    CHECK(*parse("a^b^c") == *make_pow(a, make_pow(b, c)));
    CHECK(*parse("(a^b)^c") == *make_pow(make_pow(a, b), c));
    CHECK(*parse("a * b^c") == *make_mul(a, make_pow(b, c)));

    // Unary minus is part of the atom, so it is captured by a following '^'.
    CHECK(*parse("-a^2") == *make_pow(make_neg(a), make_lit(2)));
    CHECK(*parse("-(a^2)") == *make_neg(make_pow(a, make_lit(2))));
    CHECK(*parse("(-1)^k") == *make_pow(make_neg(make_lit(1)), sym("k")));
    CHECK(*parse("-1^k") == *make_pow(make_neg(make_lit(1)), sym("k")));

    CHECK(*parse("a * -b") == *make_mul(a, make_neg(b)));
    CHECK(*parse("a - -b") == *make_sub(a, make_neg(b)));
    CHECK(*parse("--a") == *make_neg(make_neg(a)));

    // Rational literals are single atoms, canonicalized at parse time.
    CHECK(*parse("2/4") == *make_lit(make_rat(1, 2)));
    CHECK(*parse("007") == *make_lit(7));
    CHECK(*parse("5/2^3") == *make_pow(make_lit(make_rat(5, 2)), make_lit(3)));
    CHECK(*parse("a^-2") == *make_pow(a, make_neg(make_lit(2))));
}

TEST_CASE("canonical printing and parse/print round-trips") {
    CHECK(print(parse("G[p+k]*H[q+k]")) == "G[p + k] * H[q + k]");
    CHECK(print(parse("sum(k=0..n, x^k * k^2 * G[a+b*k]*H[c+d*k])")) ==
          "sum(k = 0..n, x^k * k^2 * G[a + b * k] * H[c + d * k])");
    CHECK(print(parse("(-1)^k")) == "(-1)^k");
    CHECK(print(parse("-1^k")) == "(-1)^k");
    CHECK(print(parse("5/2^3")) == "(5/2)^3");
    CHECK(print(parse("1/2*(a+b)")) == "1/2 * (a + b)");
    CHECK(print(parse("a-(b+c)")) == "a - (b + c)");
    CHECK(print(parse("a*(b*c)")) == "a * (b * c)");
    CHECK(print(parse("a^(b+c)")) == "a^(b + c)");
    CHECK(print(parse("kronecker(n,0)*floorpow(5,n,2)")) ==
          "kronecker(n, 0) * floorpow(5, n, 2)");
    CHECK(print(parse("sum(i=0..2,sum(j=0..i,i*j))")) ==
          "sum(i = 0..2, sum(j = 0..i, i * j))");
    CHECK(print(parse("binom( n , k )")) == "binom(n, k)");

    const std::vector<std::string> samples = {
        "G[p+k]*H[q+k]",
        "sum(k=0..n, x^k * k^2 * G[a+b*k]*H[c+d*k])",
        "1/2 * (G[p+n]*H[q+n+1] + G[p+n+1]*H[q+n] - G[p-1]*H[q] - G[p]*H[q-1])",
        "-a^2 - -b",
        "sum(k = 0..n, (-1)^k * binom(n, k) * F[2*k])",
    };
    for (const auto& s : samples) {
        const ExprPtr once = parse(s);
        const ExprPtr twice = parse(print(once));
        CHECK(*once == *twice);
        CHECK(print(once) == print(twice));
    }
}

TEST_CASE("evaluation anchors") {
    CHECK(eval(parse("(-1)^k"), ctx_with({{"k", 3}})) == Rat(-1));
    CHECK(eval(parse("(-1)^k"), ctx_with({{"k", 10}})) == Rat(1));
    CHECK(eval(parse("binom(4,2)*F[3]"), EvalContext{}) == Rat(12));

    // First quadratic catalog shape: sum of G*H products against its closed
    // form, both through the generic AST path.
    const ExprPtr lhs = parse("sum(k = 0..n, G[p + k] * H[q + k])");
    const ExprPtr rhs = parse(
        "1/2 * (G[p+n]*H[q+n+1] + G[p+n+1]*H[q+n] - G[p-1]*H[q] - G[p]*H[q-1])");
    {
        EvalContext ctx = ctx_with({{"p", 0}, {"q", 0}, {"n", 3}});
        CHECK(eval(lhs, ctx) == Rat(6));
        CHECK(eval(rhs, ctx) == Rat(6));
    }

    // Two-path agreement preview: generic AST evaluation matches the
    // specialized brute-force engine over a small grid.
    const std::vector<Seed> seeds = {FIB_SEED, LUCAS_SEED, Seed{3, -2}};
    for (const Seed& gs : seeds) {
        for (const Seed& hs : seeds) {
            for (long long p = -2; p <= 2; ++p) {
                for (long long q = -2; q <= 2; ++q) {
                    for (long long n = 0; n <= 6; ++n) {
                        EvalContext ctx = ctx_with({{"p", p}, {"q", q}, {"n", n}});
                        ctx.seeds['G'] = gs;
                        ctx.seeds['H'] = hs;
                        QuadSumSpec spec;
                        spec.a = p;
                        spec.b = 1;
                        spec.c = q;
                        spec.d = 1;
                        spec.m = 0;
                        spec.x = Rat(1);
                        spec.n = n;
                        spec.gseed = gs;
                        spec.hseed = hs;
                        const Rat want = quad_sum_brute(spec);
                        CHECK(eval(lhs, ctx) == want);
                        CHECK(eval(rhs, ctx) == want);
                    }
                }
            }
        }
    }

    CHECK(eval(parse("kronecker(n, 0)"), ctx_with({{"n", 0}})) == Rat(1));
    CHECK(eval(parse("kronecker(n, 0)"), ctx_with({{"n", 2}})) == Rat(0));
    CHECK(eval(parse("kronecker(1/2, 2/4)"), EvalContext{}) == Rat(1));

    CHECK(eval(parse("floorpow(5, n, 2)"), ctx_with({{"n", 5}})) == Rat(25));
    CHECK(eval(parse("floorpow(5, n, 2)"), ctx_with({{"n", -3}})) ==
          make_rat(1, 25));
    CHECK(eval(parse("floorpow(2, 7, 3)"), EvalContext{}) == Rat(4));

    CHECK(eval(parse("2^-2"), EvalContext{}) == make_rat(1, 4));
    {
        EvalContext ctx = ctx_with({{"k", -2}});
        ctx.x = make_rat(1, 2);
        CHECK(eval(parse("x^k"), ctx) == Rat(4));
    }

    // Sum bounds are evaluated outside the loop binding; the body variable
    // shadows the outer symbol of the same name.
    CHECK(eval(parse("sum(n = 0..n, n)"), ctx_with({{"n", 3}})) == Rat(6));
    // Empty range convention.
    CHECK(eval(parse("sum(k = 1..0, F[k])"), EvalContext{}) == Rat(0));

    // Falling-factorial binomials.
    CHECK(eval(parse("binom(-1, 3)"), EvalContext{}) == Rat(-1));
    CHECK(eval(parse("binom(3, 5)"), EvalContext{}) == Rat(0));
    CHECK(eval(parse("binom(3, -1)"), EvalContext{}) == Rat(0));
    CHECK(eval(parse("binom(6, 3)"), EvalContext{}) == Rat(20));

    // Default letter seeds: F and L are pinned, G/H/K default to F's seed.
    CHECK(eval(parse("L[4]"), EvalContext{}) == Rat(7));
    CHECK(eval(parse("G[5] - F[5]"), EvalContext{}) == Rat(0));
}

TEST_CASE("syntax errors carry the offset and the expectation") {
    auto expect_error = [](const std::string& text, std::size_t pos,
                           const std::string& expected) {
        try {
            parse(text);
            FAIL("no SyntaxError for: " << text);
        } catch (const SyntaxError& e) {
            CHECK(e.pos == pos);
            CHECK(e.expected == expected);
        }
    };

    expect_error("", 0, "an expression");
    expect_error("1 +", 3, "an expression");
    expect_error("G[1", 3, "']'");
    expect_error("foo(1)", 3, "sum, binom, kronecker or floorpow before '('");
    expect_error("F + 1", 2, "'['");
    expect_error("a[1]", 1, "a sequence name before '['");
    expect_error("1/0", 2, "a nonzero denominator");
    expect_error("sum(F = 0..2, 1)", 4, "a loop variable");
    expect_error("sum(k + 0..2, 1)", 6, "'='");
    expect_error("1 . 2", 2, "'..'");
    expect_error("#", 0, "a valid token");
    expect_error("sum(k = 0..n; k)", 12, "a valid token");
    expect_error("(a", 2, "')'");
    expect_error("a b", 2, "end of input");
    expect_error("sum(k = 0..n k)", 13, "','");
    expect_error("binom(1)", 7, "','");
    expect_error("1/", 2, "a denominator");

    // Pathological nesting is rejected, not crashed on.
    CHECK_THROWS_AS(parse(std::string(20000, '(')), SyntaxError);
    CHECK_THROWS_AS(parse(std::string(20000, '-') + "1"), SyntaxError);
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(eval(parse("y"), EvalContext{}), UnboundSymbol);
    CHECK_THROWS_AS(eval(parse("x"), EvalContext{}), UnboundSymbol);
    CHECK_THROWS_AS(eval(parse("F[1/2]"), EvalContext{}), NonIntegerValue);
    CHECK_THROWS_AS(eval(parse("sum(k = 0..1/2, k)"), EvalContext{}),
                    NonIntegerValue);
    CHECK_THROWS_AS(eval(parse("2^(1/2)"), EvalContext{}), NonIntegerValue);
    CHECK_THROWS_AS(eval(parse("0^-1"), EvalContext{}), ZeroToNegativePower);
    CHECK_THROWS_AS(eval(parse("floorpow(2, 1, 0)"), EvalContext{}),
                    ZeroDenominator);
}

namespace {

// Random AST of depth <= `depth` built only through the public factories, so
// every generated tree satisfies the structural invariants by construction.
ExprPtr gen_ast(std::mt19937& rng, int depth) {
    const std::vector<std::string> symbols = {"p", "q",  "r",  "s", "n", "k",
                                              "a", "b",  "c",  "d", "q1", "q2",
                                              "x", "i",  "j"};
    const std::string letters = "FLGHK";
    auto pick = [&rng](int n) {
        return std::uniform_int_distribution<int>(0, n - 1)(rng);
    };
    if (depth == 0 || pick(5) == 0) {
        if (pick(2) == 0) {
            const long long num = pick(100);
            const long long den = 1 + pick(9);
            return make_lit(make_rat(num, den));
        }
        return make_sym(symbols[pick(static_cast<int>(symbols.size()))]);
    }
    switch (pick(10)) {
        case 0: return make_seq(letters[pick(5)], gen_ast(rng, depth - 1));
        case 1: return make_neg(gen_ast(rng, depth - 1));
        case 2: return make_add(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
        case 3: return make_sub(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
        case 4: return make_mul(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
        case 5: return make_pow(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
        case 6:
            return make_sum(symbols[pick(static_cast<int>(symbols.size()))],
                            gen_ast(rng, depth - 1), gen_ast(rng, depth - 1),
                            gen_ast(rng, depth - 1));
        case 7: return make_binom(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
        case 8:
            return make_kronecker(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
        default:
            return make_floorpow(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1),
                                 gen_ast(rng, depth - 1));
    }
}

} // namespace

TEST_CASE("fuzz: printing then parsing reproduces the AST") {
    std::mt19937 rng(20260814u);
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const int depth = 1 + static_cast<int>(rng() % 6);
        const ExprPtr ast = gen_ast(rng, depth);
        const std::string text = print(ast);
        const ExprPtr back = parse(text);
        if (!(*back == *ast)) {
            ++failures;
            if (failures <= 3) {
                FAIL_CHECK("round-trip mismatch for: " << text);
            }
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("fuzz: arbitrary byte strings are rejected cleanly") {
    std::mt19937 rng(97531u);
    const std::string tokenish =
        "FLGHKsumbinomkroneckerflpw()[]{}+-*/^=.,_ 0123456789xpqrn";
    int parsed = 0;
    int rejected = 0;
    for (int i = 0; i < 10000; ++i) {
        std::string s;
        const int len = static_cast<int>(rng() % 33);
        if (i % 2 == 0) {
            for (int j = 0; j < len; ++j) {
                s.push_back(static_cast<char>(rng() % 256));
            }
        } else {
            for (int j = 0; j < len; ++j) {
                s.push_back(tokenish[rng() % tokenish.size()]);
            }
        }
        try {
            const ExprPtr e = parse(s);
            ++parsed;
            // Accidentally valid inputs must still round-trip.
            const ExprPtr back = parse(print(e));
            if (!(*back == *e)) {
                FAIL_CHECK("round-trip mismatch for accidental parse: " << s);
            }
        } catch (const SyntaxError&) {
            ++rejected;
        } catch (...) {
            FAIL_CHECK("non-SyntaxError escape for input: " << s);
        }
    }
    CHECK(parsed + rejected == 10000);
    CHECK(rejected > parsed); // random bytes are overwhelmingly invalid
}

TEST_CASE("free symbols and sequence letters") {
    const ExprPtr e = parse("sum(k = 0..n, x^k * G[p + k])");
    CHECK(free_symbols(*e) == std::set<std::string>{"n", "p", "x"});
    CHECK(sequence_letters(*e) == std::set<char>{'G'});

    // The loop variable is free inside its own bounds.
    const ExprPtr f = parse("sum(k = k..n, k)");
    CHECK(free_symbols(*f) == std::set<std::string>{"k", "n"});

    const ExprPtr g = parse("F[n] * L[n] - K[2*n]");
    CHECK(free_symbols(*g) == std::set<std::string>{"n"});
    CHECK(sequence_letters(*g) == std::set<char>{'F', 'K', 'L'});
}
