#ifndef APROOT_ERRORS_HPP
#define APROOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aproot {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad textual input
struct ParseError : Error {
    std::size_t position = 0;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// p <= deg_y, or a denominator vanishing mod p
struct CharacteristicError : Error {
    using Error::Error;
};

// constant in y, zero polynomial, or divisible by x
struct DegenerateInput : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

struct NotInvertible : Error {
    using Error::Error;
};

struct InvalidModulus : Error {
    using Error::Error;
};

struct NotMonic : Error {
    using Error::Error;
};

struct PrecisionExhausted : Error {
    long long cap;
    explicit PrecisionExhausted(long long c)
        : Error("precision cap reached (" + std::to_string(c) + ")"), cap(c) {}
};

struct RandomnessExhausted : Error {
    using Error::Error;
};

// broken invariant inside the engine; always a bug
struct InconsistentState : Error {
    using Error::Error;
};

struct NonUnitLambda : Error {
    using Error::Error;
};

struct ZeroResultant : Error {
    ZeroResultant() : Error("resultant vanishes: common factor") {}
};

} // namespace aproot

#endif
