#include "fibsum/rat.hpp"

#include <cctype>
#include <limits>

namespace fibsum {

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ZeroDenominator();
    // The two-argument cpp_rational constructor rejects negative denominators,
    // so normalize the sign first; the constructor then reduces by the gcd.
    if (den < 0) return Rat(-num, -den);
    return Rat(num, den);
}

Rat rat_pow(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw ZeroToNegativePower();
        return Rat(0);
    }
    unsigned long long mag = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                                   : static_cast<unsigned long long>(e);
    BigInt n = boost::multiprecision::pow(numerator(base), static_cast<unsigned>(mag));
    BigInt d = boost::multiprecision::pow(denominator(base), static_cast<unsigned>(mag));
    return e < 0 ? make_rat(d, n) : make_rat(n, d);
}

std::string rat_str(const Rat& r) { return r.str(); }

Rat rat_parse(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const char* expected) -> void { throw SyntaxError(i, expected); };

    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    auto read_digits = [&]() -> BigInt {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("digit");
        BigInt v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        return v;
    };
    BigInt num = read_digits();
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_digits();
    }
    if (i != text.size()) fail("end of input");
    if (neg) num = -num;
    return make_rat(num, den);
}

BigInt to_integer(const Rat& r, const char* what_part) {
    if (!is_integer(r)) throw NonIntegerValue(what_part);
    return numerator(r);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b; // truncates toward zero
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

long long to_ll(const BigInt& v, const char* what_part) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw NonIntegerValue(what_part);
    return static_cast<long long>(v);
}

} // namespace fibsum
