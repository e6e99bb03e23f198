#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fibsum/rat.hpp"
#include "fibsum/sequence.hpp"

namespace fibsum {

// Abstract syntax tree over the identity expression language.
//
// Grammar (whitespace-insensitive):
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*            (implicit '*' is not allowed)
//   factor   := atom ('^' factor)?              ('^' is right-associative)
//   atom     := literal | symbol | seqRef | '(' expr ')' | '-' atom | call
//   literal  := INT ('/' INT)?                  (nonnegative; '/' is not an operator)
//   seqRef   := ('F'|'L'|'G'|'H'|'K') '[' expr ']'
//   call     := 'sum' '(' NAME '=' expr '..' expr ',' expr ')'
//             | 'binom' '(' expr ',' expr ')'
//             | 'kronecker' '(' expr ',' expr ')'
//             | 'floorpow' '(' expr ',' expr ',' expr ')'
//
// The names F, L, G, H, K are reserved for sequences and the call names are
// reserved for calls; any other NAME ([A-Za-z][A-Za-z0-9]*) is a free symbol.
enum class ExprKind {
    Literal,   // value          (canonical nonnegative rational)
    Symbol,    // name
    SeqRef,    // name = letter, args = {index}
    Neg,       // args = {operand}
    Add,       // args = {lhs, rhs}
    Sub,       // args = {lhs, rhs}
    Mul,       // args = {lhs, rhs}
    Pow,       // args = {base, exponent}   (exponent must evaluate to an integer)
    Sum,       // name = loop variable, args = {lo, hi, body}; empty when hi < lo
    Binom,     // args = {n, k}; falling-factorial definition, 0 when k < 0
    Kronecker, // args = {a, b}; 1 when a == b else 0
    FloorPow,  // args = {base, num, den}; base^floor(num/den)
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    Rat value;                 // Literal only
    std::string name;          // Symbol / SeqRef / Sum only
    std::vector<ExprPtr> args; // children
};

// Deep structural equality (literal values, names, and shapes).
bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

// Node factories. make_lit requires a nonnegative value (negative constants
// are spelled Neg(Literal) so that parse/print round-trips are exact).
ExprPtr make_lit(const Rat& v);
ExprPtr make_lit(long long v);
ExprPtr make_sym(std::string name);
ExprPtr make_seq(char letter, ExprPtr index);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr base, ExprPtr exponent);
ExprPtr make_sum(std::string var, ExprPtr lo, ExprPtr hi, ExprPtr body);
ExprPtr make_binom(ExprPtr n, ExprPtr k);
ExprPtr make_kronecker(ExprPtr a, ExprPtr b);
ExprPtr make_floorpow(ExprPtr base, ExprPtr num, ExprPtr den);

// Parses text into an AST. Throws SyntaxError with the byte offset of the
// problem and a description of what was expected. Never crashes on bad input.
ExprPtr parse(const std::string& text);

// Canonical text form: single spaces around '+', '-', '*', none around '^',
// minimal parentheses (plus clarity parentheses around a negated or
// fractional power base). parse(print(e)) == e for every AST.
std::string print(const Expr& e);
std::string print(const ExprPtr& e);

// Bindings used by eval. Integer symbols live in `ints`; the weight symbol
// "x" takes its value from `x` when set (falling back to `ints`); sequence
// letters resolve through `seeds`.
struct EvalContext {
    std::map<std::string, BigInt> ints;
    std::optional<Rat> x;
    std::map<char, Seed> seeds{{'F', FIB_SEED},
                               {'L', LUCAS_SEED},
                               {'G', FIB_SEED},
                               {'H', FIB_SEED},
                               {'K', FIB_SEED}};
};

// Exact evaluation. Throws UnboundSymbol for a free symbol without a
// binding, NonIntegerValue where an index/exponent/bound is fractional, and
// propagates arithmetic errors (ZeroToNegativePower, ZeroDenominator).
Rat eval(const Expr& e, const EvalContext& ctx);
Rat eval(const ExprPtr& e, const EvalContext& ctx);

// Reusable evaluator for dense sweeps: owns its context and keeps the
// sequence tables warm across calls. Integer bindings and x may be mutated
// through context() between calls; a letter's seed is read once, when the
// letter is first referenced, so changing seeds requires a new Evaluator.
class Evaluator {
public:
    explicit Evaluator(EvalContext ctx) : ctx_(std::move(ctx)) {}

    EvalContext& context() { return ctx_; }

    Rat eval(const Expr& e);
    Rat eval(const ExprPtr& e) { return eval(*e); }

private:
    // Evaluation result that stays in integer arithmetic as long as the
    // value is an integer; rationals only appear once a fractional literal,
    // a rational binding, or a negative exponent enters the computation.
    struct Value {
        BigInt i;
        Rat r;
        bool isInt = true;

        Rat to_rat() && { return isInt ? Rat(std::move(i)) : std::move(r); }
    };

    static BigInt as_integer(Value v, const char* what_part);

    Value eval_v(const Expr& e);
    Value lookup(const std::string& name);
    Sequence& seq(char letter);
    Value run_sum(const Expr& e);
    Value run_binom(const Expr& e);
    Value run_floorpow(const Expr& e);

    EvalContext ctx_;
    std::map<std::string, BigInt> locals_; // sum variables, shadowing ctx_
    std::map<char, Sequence> seqs_;
};

// Free symbols of e (sum variables are bound inside their body; occurrences
// in the bounds of their own sum are free).
std::set<std::string> free_symbols(const Expr& e);

// Sequence letters referenced anywhere in e.
std::set<char> sequence_letters(const Expr& e);

} // namespace fibsum
