#ifndef SBA_SCALAR_HPP
#define SBA_SCALAR_HPP

#include <cstdint>
#include <compare>
#include <string>

#include <gmpxx.h>

#include "sba/errors.hpp"

namespace sba {

// The coefficient field K: the rationals or a prime field F_p with a
// machine-word modulus.
struct FieldDescriptor {
    enum class Kind { rational, prime };

    Kind kind = Kind::rational;
    std::uint64_t modulus = 0; // set iff kind == prime

    static FieldDescriptor rationals() { return {Kind::rational, 0}; }
    static FieldDescriptor prime(std::uint64_t p);

    bool is_prime_field() const { return kind == Kind::prime; }
    std::uint64_t characteristic() const { return is_prime_field() ? modulus : 0; }

    bool operator==(const FieldDescriptor&) const = default;
};

// Integer extended with -infinity; houses log-scale absolute values and
// norms.  |0| = 0 is NEG_INFINITY on this scale.
class ExtendedInt {
public:
    ExtendedInt() : finite_(false), v_(0) {}
    ExtendedInt(long long v) : finite_(true), v_(v) {}

    static ExtendedInt neg_infinity() { return ExtendedInt(); }

    bool is_neg_infinity() const { return !finite_; }
    bool is_finite() const { return finite_; }

    // Precondition: finite.
    long long value() const;

    ExtendedInt operator+(const ExtendedInt& o) const {
        if (!finite_ || !o.finite_) return neg_infinity();
        return ExtendedInt(v_ + o.v_);
    }
    ExtendedInt operator+(long long n) const {
        return finite_ ? ExtendedInt(v_ + n) : neg_infinity();
    }

    bool operator==(const ExtendedInt& o) const {
        return finite_ == o.finite_ && (!finite_ || v_ == o.v_);
    }
    bool operator<(const ExtendedInt& o) const {
        if (!finite_) return o.finite_;
        if (!o.finite_) return false;
        return v_ < o.v_;
    }
    bool operator<=(const ExtendedInt& o) const { return *this < o || *this == o; }
    bool operator>(const ExtendedInt& o) const { return o < *this; }
    bool operator>=(const ExtendedInt& o) const { return o <= *this; }

    std::string to_string() const;

private:
    bool finite_;
    long long v_;
};

ExtendedInt max(const ExtendedInt& a, const ExtendedInt& b);

// An exact element of K in canonical form: a reduced fraction with
// positive denominator, or a residue in [0, p).  Equality is structural.
class Scalar {
public:
    Scalar() : field_(FieldDescriptor::rationals()), res_(0) {}

    static Scalar zero(const FieldDescriptor& f) { return from_int(f, 0); }
    static Scalar one(const FieldDescriptor& f) { return from_int(f, 1); }
    static Scalar from_int(const FieldDescriptor& f, long long n);
    static Scalar rational(long long num, long long den);
    static Scalar rational(const mpq_class& q);
    static Scalar residue(std::uint64_t p, std::uint64_t r);

    // Parses the textual encoding: "num/den" or "num" for rationals,
    // a decimal residue for prime fields.  Throws Error on malformed text.
    static Scalar parse(const FieldDescriptor& f, const std::string& text);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    // Valid only in the respective field kind.
    const mpq_class& rat() const { return rat_; }
    std::uint64_t res() const { return res_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws DivisionByZero
    Scalar operator-() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_same_field(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }

    FieldDescriptor field_;
    mpq_class rat_;          // rational value, canonical (gmp keeps it reduced)
    std::uint64_t res_ = 0;  // prime-field residue
};

} // namespace sba

#endif
