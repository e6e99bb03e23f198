#pragma once

#include <stdexcept>
#include <string>

namespace fibsum {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// 0 raised to a negative power.
struct ZeroToNegativePower : Error {
    ZeroToNegativePower() : Error("zero raised to a negative power") {}
};

// Rational with a zero denominator.
struct ZeroDenominator : Error {
    ZeroDenominator() : Error("rational with zero denominator") {}
};

// A value that had to be an integer (index, exponent, bound) was not.
struct NonIntegerValue : Error {
    explicit NonIntegerValue(const std::string& what_part)
        : Error("expected an integer value: " + what_part) {}
};

// Internal consistency failure: an exact halving met an odd value.
struct InternalParity : Error {
    InternalParity() : Error("internal parity violation: odd value before exact halving") {}
};

// A closed form's denominator vanished at the given weight.
// `which` identifies the vanishing factor (1 or 2).
struct VanishingDenominator : Error {
    int which;
    explicit VanishingDenominator(int w)
        : Error("denominator delta" + std::to_string(w) + " vanishes at this weight"), which(w) {}
};

// Singular weight outside the families that have explicit limit formulas.
struct UnsupportedLimit : Error {
    UnsupportedLimit() : Error("singular weight without a supported limit formula") {}
};

// An infinite series evaluated outside its convergence region.
struct DivergentSeries : Error {
    DivergentSeries() : Error("series diverges for this weight") {}
};

// Convergence could not be decided within the guard band.
struct Indeterminate : Error {
    Indeterminate() : Error("convergence test indeterminate inside the guard band") {}
};

// An identity's seed guard (G0*G2 - G1^2 != 0) failed.
struct GuardViolated : Error {
    explicit GuardViolated(const std::string& guard)
        : Error("guard violated: " + guard) {}
};

// Catalog lookup for an id that does not exist.
struct UnknownRecord : Error {
    explicit UnknownRecord(const std::string& id) : Error("unknown record: " + id) {}
};

// Expression text that does not conform to the grammar.
// `pos` is a 0-based byte offset into the input.
struct SyntaxError : Error {
    std::size_t pos;
    std::string expected;
    SyntaxError(std::size_t p, const std::string& exp)
        : Error("syntax error at offset " + std::to_string(p) + ": expected " + exp),
          pos(p), expected(exp) {}
};

// Evaluation met a symbol with no binding.
struct UnboundSymbol : Error {
    explicit UnboundSymbol(const std::string& name) : Error("unbound symbol: " + name) {}
};

// File could not be read or written.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error("i/o error: " + msg) {}
};

// Catalog JSON that is well-formed but violates the record schema.
struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error("schema error: " + msg) {}
};

} // namespace fibsum
