#ifndef SBA_ERRORS_HPP
#define SBA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sba {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class NotSquare : public Error {
public:
    NotSquare() : Error("matrix is not square") {}
};

// An operation needed coefficients beyond the known precision.  what()
// names the offending shape or entry when the caller supplied one.
class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& detail)
        : Error("precision exhausted: " + detail) {}
};

class ZeroVector : public Error {
public:
    ZeroVector() : Error("the zero vector is excluded") {}
};

// A linear form is zero to the full known precision; this is a disproof
// witness, not a library bug.  zero_to holds the depth to which the tail
// is certified zero (the norm is < e^{-zero_to}).
class ZeroLinearForm : public Error {
public:
    ZeroLinearForm(int row, long long zero_to)
        : Error("linear form " + std::to_string(row) +
                " vanishes to precision " + std::to_string(zero_to)),
          row(row), zero_to(zero_to) {}
    int row;
    long long zero_to;
};

class InfiniteField : public Error {
public:
    InfiniteField() : Error("enumeration requires a finite field") {}
};

class InfiniteFieldRequired : public Error {
public:
    InfiniteFieldRequired() : Error("construction requires an infinite field") {}
};

class InductionBroken : public Error {
public:
    explicit InductionBroken(const std::string& detail)
        : Error("induction broken: " + detail) {}
};

class PositiveCharacteristic : public Error {
public:
    PositiveCharacteristic() : Error("series family needs characteristic 0") {}
};

class EmptySearchSpace : public Error {
public:
    EmptySearchSpace() : Error("no nonzero vector in the search space") {}
};

} // namespace sba

#endif
