#include "fibsum/expr.hpp"

#include <cctype>
#include <utility>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

bool is_sequence_letter(const std::string& name) {
    return name.size() == 1 && (name == "F" || name == "L" || name == "G" ||
                                name == "H" || name == "K");
}

bool is_call_name(const std::string& name) {
    return name == "sum" || name == "binom" || name == "kronecker" ||
           name == "floorpow";
}

// Decimal conversion. BigInt's own string constructor would treat a leading
// zero as an octal prefix (and reject "09"), so strip the zeros first.
BigInt bigint_from_digits(const std::string& digits) {
    const std::size_t nz = digits.find_first_not_of('0');
    if (nz == std::string::npos) {
        return BigInt(0);
    }
    return BigInt(digits.substr(nz));
}

ExprPtr node(ExprKind kind, Rat value, std::string name, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->value = std::move(value);
    e->name = std::move(name);
    e->args = std::move(args);
    return e;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok {
    Int,
    Name,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Equals,
    DotDot,
    End,
};

struct Token {
    Tok kind;
    std::size_t pos;   // byte offset of the first character
    std::string text;  // Int digits / Name characters
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& current() const { return current_; }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, start, ""};
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
                ++end;
            }
            current_ = {Tok::Int, start, text_.substr(start, end - start)};
            pos_ = end;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[end]))) {
                ++end;
            }
            current_ = {Tok::Name, start, text_.substr(start, end - start)};
            pos_ = end;
            return;
        }
        switch (c) {
            case '+': current_ = {Tok::Plus, start, "+"}; ++pos_; return;
            case '-': current_ = {Tok::Minus, start, "-"}; ++pos_; return;
            case '*': current_ = {Tok::Star, start, "*"}; ++pos_; return;
            case '^': current_ = {Tok::Caret, start, "^"}; ++pos_; return;
            case '/': current_ = {Tok::Slash, start, "/"}; ++pos_; return;
            case '(': current_ = {Tok::LParen, start, "("}; ++pos_; return;
            case ')': current_ = {Tok::RParen, start, ")"}; ++pos_; return;
            case '[': current_ = {Tok::LBracket, start, "["}; ++pos_; return;
            case ']': current_ = {Tok::RBracket, start, "]"}; ++pos_; return;
            case ',': current_ = {Tok::Comma, start, ","}; ++pos_; return;
            case '=': current_ = {Tok::Equals, start, "="}; ++pos_; return;
            case '.':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '.') {
                    current_ = {Tok::DotDot, start, ".."};
                    pos_ += 2;
                    return;
                }
                throw SyntaxError(start, "'..'");
            default:
                throw SyntaxError(start, "a valid token");
        }
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{Tok::End, 0, ""};
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    // Generous recursion bound: deep enough for any real expression, shallow
    // enough that adversarial input exhausts the limit, not the stack.
    static constexpr int kMaxDepth = 10000;

    Lexer lex_;
    int depth_ = 0;

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxDepth) {
                throw SyntaxError(parser.lex_.current().pos, "shallower nesting");
            }
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    const Token& cur() const { return lex_.current(); }

    Token take() {
        Token t = cur();
        lex_.advance();
        return t;
    }

    void expect(Tok kind, const std::string& what) {
        if (cur().kind != kind) {
            throw SyntaxError(cur().pos, what);
        }
        lex_.advance();
    }

    ExprPtr parse_expr() {
        DepthGuard guard(*this);
        ExprPtr e = parse_term();
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            const bool add = take().kind == Tok::Plus;
            ExprPtr rhs = parse_term();
            e = node(add ? ExprKind::Add : ExprKind::Sub, Rat(0), "", {e, rhs});
        }
        return e;
    }

    ExprPtr parse_term() {
        DepthGuard guard(*this);
        ExprPtr e = parse_factor();
        while (cur().kind == Tok::Star) {
            take();
            ExprPtr rhs = parse_factor();
            e = node(ExprKind::Mul, Rat(0), "", {e, rhs});
        }
        return e;
    }

    ExprPtr parse_factor() {
        DepthGuard guard(*this);
        ExprPtr base = parse_atom();
        if (cur().kind == Tok::Caret) {
            take();
            ExprPtr exponent = parse_factor();
            return node(ExprKind::Pow, Rat(0), "", {base, exponent});
        }
        return base;
    }

    ExprPtr parse_atom() {
        DepthGuard guard(*this);
        switch (cur().kind) {
            case Tok::Int:
                return parse_literal();
            case Tok::Minus: {
                take();
                ExprPtr a = parse_atom();
                return node(ExprKind::Neg, Rat(0), "", {a});
            }
            case Tok::LParen: {
                take();
                ExprPtr e = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Name:
                return parse_named();
            default:
                throw SyntaxError(cur().pos, "an expression");
        }
    }

    ExprPtr parse_literal() {
        const Token numTok = take();
        BigInt num = bigint_from_digits(numTok.text);
        if (cur().kind == Tok::Slash) {
            take();
            if (cur().kind != Tok::Int) {
                throw SyntaxError(cur().pos, "a denominator");
            }
            const Token denTok = take();
            BigInt den = bigint_from_digits(denTok.text);
            if (den == 0) {
                throw SyntaxError(denTok.pos, "a nonzero denominator");
            }
            return node(ExprKind::Literal, make_rat(num, den), "", {});
        }
        return node(ExprKind::Literal, Rat(num), "", {});
    }

    ExprPtr parse_named() {
        const Token nameTok = take();
        const std::string& name = nameTok.text;
        if (is_sequence_letter(name)) {
            expect(Tok::LBracket, "'['");
            ExprPtr index = parse_expr();
            expect(Tok::RBracket, "']'");
            return node(ExprKind::SeqRef, Rat(0), name, {index});
        }
        if (is_call_name(name)) {
            expect(Tok::LParen, "'('");
            if (name == "sum") return parse_sum_tail();
            if (name == "binom") return parse_pair_tail(ExprKind::Binom);
            if (name == "kronecker") return parse_pair_tail(ExprKind::Kronecker);
            return parse_floorpow_tail();
        }
        if (cur().kind == Tok::LBracket) {
            throw SyntaxError(cur().pos, "a sequence name before '['");
        }
        if (cur().kind == Tok::LParen) {
            throw SyntaxError(cur().pos, "sum, binom, kronecker or floorpow before '('");
        }
        return node(ExprKind::Symbol, Rat(0), name, {});
    }

    ExprPtr parse_sum_tail() {
        if (cur().kind != Tok::Name || is_sequence_letter(cur().text) ||
            is_call_name(cur().text)) {
            throw SyntaxError(cur().pos, "a loop variable");
        }
        const Token varTok = take();
        expect(Tok::Equals, "'='");
        ExprPtr lo = parse_expr();
        expect(Tok::DotDot, "'..'");
        ExprPtr hi = parse_expr();
        expect(Tok::Comma, "','");
        ExprPtr body = parse_expr();
        expect(Tok::RParen, "')'");
        return node(ExprKind::Sum, Rat(0), varTok.text, {lo, hi, body});
    }

    ExprPtr parse_pair_tail(ExprKind kind) {
        ExprPtr a = parse_expr();
        expect(Tok::Comma, "','");
        ExprPtr b = parse_expr();
        expect(Tok::RParen, "')'");
        return node(kind, Rat(0), "", {a, b});
    }

    ExprPtr parse_floorpow_tail() {
        ExprPtr base = parse_expr();
        expect(Tok::Comma, "','");
        ExprPtr num = parse_expr();
        expect(Tok::Comma, "','");
        ExprPtr den = parse_expr();
        expect(Tok::RParen, "')'");
        return node(ExprKind::FloorPow, Rat(0), "", {base, num, den});
    }
};

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

// Grammar levels: 1 = expr (+,-), 2 = term (*), 3 = factor (^), 4 = atom.
int level_of(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul: return 2;
        case ExprKind::Pow: return 3;
        default: return 4;
    }
}

void print_node(const Expr& e, int minLevel, std::string& out);

void print_parenthesized(const Expr& e, std::string& out) {
    out += '(';
    print_node(e, 1, out);
    out += ')';
}

// A power base or exponent that is itself negated or fractional prints with
// clarity parentheses ("(-1)^k", "(1/2)^n"); both forms parse identically.
bool wants_power_parens(const Expr& e) {
    if (e.kind == ExprKind::Neg) return true;
    return e.kind == ExprKind::Literal && !is_integer(e.value);
}

void print_node(const Expr& e, int minLevel, std::string& out) {
    if (level_of(e) < minLevel) {
        print_parenthesized(e, out);
        return;
    }
    switch (e.kind) {
        case ExprKind::Literal:
            out += rat_str(e.value);
            return;
        case ExprKind::Symbol:
            out += e.name;
            return;
        case ExprKind::SeqRef:
            out += e.name;
            out += '[';
            print_node(*e.args[0], 1, out);
            out += ']';
            return;
        case ExprKind::Neg:
            out += '-';
            print_node(*e.args[0], 4, out);
            return;
        case ExprKind::Add:
        case ExprKind::Sub:
            print_node(*e.args[0], 1, out);
            out += (e.kind == ExprKind::Add) ? " + " : " - ";
            print_node(*e.args[1], 2, out);
            return;
        case ExprKind::Mul:
            print_node(*e.args[0], 2, out);
            out += " * ";
            print_node(*e.args[1], 3, out);
            return;
        case ExprKind::Pow:
            if (wants_power_parens(*e.args[0])) {
                print_parenthesized(*e.args[0], out);
            } else {
                print_node(*e.args[0], 4, out);
            }
            out += '^';
            if (wants_power_parens(*e.args[1])) {
                print_parenthesized(*e.args[1], out);
            } else {
                print_node(*e.args[1], 3, out);
            }
            return;
        case ExprKind::Sum:
            out += "sum(";
            out += e.name;
            out += " = ";
            print_node(*e.args[0], 1, out);
            out += "..";
            print_node(*e.args[1], 1, out);
            out += ", ";
            print_node(*e.args[2], 1, out);
            out += ')';
            return;
        case ExprKind::Binom:
        case ExprKind::Kronecker:
            out += (e.kind == ExprKind::Binom) ? "binom(" : "kronecker(";
            print_node(*e.args[0], 1, out);
            out += ", ";
            print_node(*e.args[1], 1, out);
            out += ')';
            return;
        case ExprKind::FloorPow:
            out += "floorpow(";
            print_node(*e.args[0], 1, out);
            out += ", ";
            print_node(*e.args[1], 1, out);
            out += ", ";
            print_node(*e.args[2], 1, out);
            out += ')';
            return;
    }
}

void collect_symbols(const Expr& e, std::vector<std::string>& bound,
                     std::set<std::string>& out) {
    switch (e.kind) {
        case ExprKind::Symbol: {
            for (const auto& b : bound) {
                if (b == e.name) return;
            }
            out.insert(e.name);
            return;
        }
        case ExprKind::Sum:
            // Bounds are evaluated outside the loop binding; only the body
            // sees the loop variable.
            collect_symbols(*e.args[0], bound, out);
            collect_symbols(*e.args[1], bound, out);
            bound.push_back(e.name);
            collect_symbols(*e.args[2], bound, out);
            bound.pop_back();
            return;
        default:
            for (const auto& a : e.args) {
                collect_symbols(*a, bound, out);
            }
            return;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Public interface
// ---------------------------------------------------------------------------

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.name != b.name || a.value != b.value ||
        a.args.size() != b.args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!(*a.args[i] == *b.args[i])) {
            return false;
        }
    }
    return true;
}

ExprPtr make_lit(const Rat& v) {
    if (v < 0) {
        throw Error("literal nodes are nonnegative; wrap Neg around the literal");
    }
    return node(ExprKind::Literal, v, "", {});
}

ExprPtr make_lit(long long v) { return make_lit(Rat(v)); }

ExprPtr make_sym(std::string name) {
    return node(ExprKind::Symbol, Rat(0), std::move(name), {});
}

ExprPtr make_seq(char letter, ExprPtr index) {
    std::string name(1, letter);
    if (!is_sequence_letter(name)) {
        throw Error("sequence letter must be one of F, L, G, H, K");
    }
    return node(ExprKind::SeqRef, Rat(0), std::move(name), {std::move(index)});
}

ExprPtr make_neg(ExprPtr a) {
    return node(ExprKind::Neg, Rat(0), "", {std::move(a)});
}

ExprPtr make_add(ExprPtr a, ExprPtr b) {
    return node(ExprKind::Add, Rat(0), "", {std::move(a), std::move(b)});
}

ExprPtr make_sub(ExprPtr a, ExprPtr b) {
    return node(ExprKind::Sub, Rat(0), "", {std::move(a), std::move(b)});
}

ExprPtr make_mul(ExprPtr a, ExprPtr b) {
    return node(ExprKind::Mul, Rat(0), "", {std::move(a), std::move(b)});
}

ExprPtr make_pow(ExprPtr base, ExprPtr exponent) {
    return node(ExprKind::Pow, Rat(0), "", {std::move(base), std::move(exponent)});
}

ExprPtr make_sum(std::string var, ExprPtr lo, ExprPtr hi, ExprPtr body) {
    if (var.empty() || is_sequence_letter(var) || is_call_name(var)) {
        throw Error("invalid sum variable: " + var);
    }
    return node(ExprKind::Sum, Rat(0), std::move(var),
                {std::move(lo), std::move(hi), std::move(body)});
}

ExprPtr make_binom(ExprPtr n, ExprPtr k) {
    return node(ExprKind::Binom, Rat(0), "", {std::move(n), std::move(k)});
}

ExprPtr make_kronecker(ExprPtr a, ExprPtr b) {
    return node(ExprKind::Kronecker, Rat(0), "", {std::move(a), std::move(b)});
}

ExprPtr make_floorpow(ExprPtr base, ExprPtr num, ExprPtr den) {
    return node(ExprKind::FloorPow, Rat(0), "",
                {std::move(base), std::move(num), std::move(den)});
}

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Expr& e) {
    std::string out;
    print_node(e, 1, out);
    return out;
}

std::string print(const ExprPtr& e) { return print(*e); }

// ---------------------------------------------------------------------------
// Evaluator
// ---------------------------------------------------------------------------

namespace {

// Caps that turn runaway inputs (gigantic sum ranges or binomial orders fed
// through the CLI) into clean errors instead of unbounded loops.
constexpr long long kMaxSumTerms = 20'000'000;
constexpr long long kMaxBinomOrder = 1'000'000;

} // namespace

namespace {

// pow for the integer lane; mirrors the integer branch of rat_pow.
BigInt int_pow(const BigInt& base, long long e) {
    if (e == 0) return BigInt(1);
    if (base == 0) return BigInt(0);
    return boost::multiprecision::pow(
        base, static_cast<unsigned>(static_cast<unsigned long long>(e)));
}

} // namespace

Rat Evaluator::eval(const Expr& e) { return eval_v(e).to_rat(); }

BigInt Evaluator::as_integer(Value v, const char* what_part) {
    return v.isInt ? std::move(v.i) : to_integer(v.r, what_part);
}

Evaluator::Value Evaluator::eval_v(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Literal:
            if (denominator(e.value) == 1) {
                return {numerator(e.value), Rat(), true};
            }
            return {BigInt(), e.value, false};
        case ExprKind::Symbol:
            return lookup(e.name);
        case ExprKind::SeqRef: {
            const long long idx =
                to_ll(as_integer(eval_v(*e.args[0]), "sequence index"), "sequence index");
            return {BigInt(seq(e.name[0]).at(idx)), Rat(), true};
        }
        case ExprKind::Neg: {
            Value v = eval_v(*e.args[0]);
            if (v.isInt) return {BigInt(-v.i), Rat(), true};
            return {BigInt(), -std::move(v.r), false};
        }
        case ExprKind::Add: {
            Value a = eval_v(*e.args[0]);
            Value b = eval_v(*e.args[1]);
            if (a.isInt && b.isInt) return {BigInt(a.i + b.i), Rat(), true};
            return {BigInt(), std::move(a).to_rat() + std::move(b).to_rat(), false};
        }
        case ExprKind::Sub: {
            Value a = eval_v(*e.args[0]);
            Value b = eval_v(*e.args[1]);
            if (a.isInt && b.isInt) return {BigInt(a.i - b.i), Rat(), true};
            return {BigInt(), std::move(a).to_rat() - std::move(b).to_rat(), false};
        }
        case ExprKind::Mul: {
            Value a = eval_v(*e.args[0]);
            Value b = eval_v(*e.args[1]);
            if (a.isInt && b.isInt) return {BigInt(a.i * b.i), Rat(), true};
            return {BigInt(), std::move(a).to_rat() * std::move(b).to_rat(), false};
        }
        case ExprKind::Pow: {
            Value base = eval_v(*e.args[0]);
            const long long exp =
                to_ll(as_integer(eval_v(*e.args[1]), "exponent"), "exponent");
            if (base.isInt && exp >= 0) {
                return {int_pow(base.i, exp), Rat(), true};
            }
            return {BigInt(), rat_pow(std::move(base).to_rat(), exp), false};
        }
        case ExprKind::Sum:
            return run_sum(e);
        case ExprKind::Binom:
            return run_binom(e);
        case ExprKind::Kronecker: {
            Value a = eval_v(*e.args[0]);
            Value b = eval_v(*e.args[1]);
            const bool equal = (a.isInt && b.isInt)
                                   ? a.i == b.i
                                   : std::move(a).to_rat() == std::move(b).to_rat();
            return {BigInt(equal ? 1 : 0), Rat(), true};
        }
        case ExprKind::FloorPow:
            return run_floorpow(e);
    }
    throw Error("unreachable expression kind");
}

Evaluator::Value Evaluator::lookup(const std::string& name) {
    if (const auto it = locals_.find(name); it != locals_.end()) {
        return {it->second, Rat(), true};
    }
    if (name == "x" && ctx_.x) {
        return {BigInt(), *ctx_.x, false};
    }
    if (const auto it = ctx_.ints.find(name); it != ctx_.ints.end()) {
        return {it->second, Rat(), true};
    }
    throw UnboundSymbol(name);
}

Sequence& Evaluator::seq(char letter) {
    if (const auto it = seqs_.find(letter); it != seqs_.end()) {
        return it->second;
    }
    const auto seedIt = ctx_.seeds.find(letter);
    if (seedIt == ctx_.seeds.end()) {
        throw UnboundSymbol(std::string(1, letter));
    }
    return seqs_.emplace(letter, Sequence(seedIt->second)).first->second;
}

Evaluator::Value Evaluator::run_sum(const Expr& e) {
    const BigInt lo = as_integer(eval_v(*e.args[0]), "sum lower bound");
    const BigInt hi = as_integer(eval_v(*e.args[1]), "sum upper bound");
    if (hi < lo) {
        return {BigInt(0), Rat(), true};
    }
    if (hi - lo >= kMaxSumTerms) {
        throw Error("sum range too large to evaluate");
    }
    const auto prior = locals_.find(e.name);
    const std::optional<BigInt> saved =
        prior == locals_.end() ? std::nullopt : std::optional<BigInt>(prior->second);
    Value acc{BigInt(0), Rat(), true};
    for (BigInt k = lo; k <= hi; ++k) {
        locals_[e.name] = k;
        Value term = eval_v(*e.args[2]);
        if (acc.isInt && term.isInt) {
            acc.i += term.i;
        } else {
            if (acc.isInt) {
                acc.r = Rat(std::move(acc.i));
                acc.isInt = false;
            }
            acc.r += std::move(term).to_rat();
        }
    }
    if (saved) {
        locals_[e.name] = *saved;
    } else {
        locals_.erase(e.name);
    }
    return acc;
}

Evaluator::Value Evaluator::run_binom(const Expr& e) {
    const BigInt n = as_integer(eval_v(*e.args[0]), "binomial order");
    const BigInt kBig = as_integer(eval_v(*e.args[1]), "binomial index");
    if (kBig < 0) {
        return {BigInt(0), Rat(), true};
    }
    if (kBig > kMaxBinomOrder) {
        throw Error("binomial index too large to evaluate");
    }
    const long long k = to_ll(kBig, "binomial index");
    // Falling-factorial definition: exact for any integer n, zero for
    // 0 <= n < k because the factor (n - n) appears.
    BigInt num = 1;
    BigInt den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return {BigInt(num / den), Rat(), true};
}

Evaluator::Value Evaluator::run_floorpow(const Expr& e) {
    Value base = eval_v(*e.args[0]);
    BigInt num = as_integer(eval_v(*e.args[1]), "floorpow numerator");
    BigInt den = as_integer(eval_v(*e.args[2]), "floorpow denominator");
    if (den == 0) {
        throw ZeroDenominator();
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long exp = to_ll(floor_div(num, den), "exponent");
    if (base.isInt && exp >= 0) {
        return {int_pow(base.i, exp), Rat(), true};
    }
    return {BigInt(), rat_pow(std::move(base).to_rat(), exp), false};
}

Rat eval(const Expr& e, const EvalContext& ctx) { return Evaluator(ctx).eval(e); }

Rat eval(const ExprPtr& e, const EvalContext& ctx) { return eval(*e, ctx); }

std::set<std::string> free_symbols(const Expr& e) {
    std::set<std::string> out;
    std::vector<std::string> bound;
    collect_symbols(e, bound, out);
    return out;
}

std::set<char> sequence_letters(const Expr& e) {
    std::set<char> out;
    if (e.kind == ExprKind::SeqRef) {
        out.insert(e.name[0]);
    }
    for (const auto& a : e.args) {
        auto sub = sequence_letters(*a);
        out.insert(sub.begin(), sub.end());
    }
    return out;
}

} // namespace fibsum
