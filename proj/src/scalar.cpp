#include "sba/scalar.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sba {

namespace {

bool is_small_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZero();
    return pow_mod(a, p - 2, p); // p prime
}

} // namespace

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
    if (!is_small_prime(p)) throw Error("modulus must be a prime");
    return {Kind::prime, p};
}

long long ExtendedInt::value() const {
    if (!finite_) throw Error("NEG_INFINITY has no integer value");
    return v_;
}

std::string ExtendedInt::to_string() const {
    return finite_ ? std::to_string(v_) : std::string("-inf");
}

ExtendedInt max(const ExtendedInt& a, const ExtendedInt& b) {
    return a < b ? b : a;
}

Scalar Scalar::from_int(const FieldDescriptor& f, long long n) {
    Scalar s;
    s.field_ = f;
    if (f.is_prime_field()) {
        long long r = n % static_cast<long long>(f.modulus);
        if (r < 0) r += static_cast<long long>(f.modulus);
        s.res_ = static_cast<std::uint64_t>(r);
    } else {
        s.rat_ = mpq_class(static_cast<long>(n));
    }
    return s;
}

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero();
    Scalar s;
    s.field_ = FieldDescriptor::rationals();
    s.rat_ = mpq_class(mpz_class(static_cast<long>(num)),
                       mpz_class(static_cast<long>(den)));
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    s.field_ = FieldDescriptor::rationals();
    s.rat_ = q;
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::residue(std::uint64_t p, std::uint64_t r) {
    Scalar s;
    s.field_ = FieldDescriptor::prime(p);
    s.res_ = r % p;
    return s;
}

Scalar Scalar::parse(const FieldDescriptor& f, const std::string& text) {
    if (text.empty()) throw Error("empty scalar text");
    if (f.is_prime_field()) {
        for (char c : text)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error("malformed residue: " + text);
        return residue(f.modulus, std::strtoull(text.c_str(), nullptr, 10));
    }
    try {
        auto slash = text.find('/');
        mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
        mpz_class den(slash == std::string::npos ? std::string("1")
                                                 : text.substr(slash + 1));
        if (den == 0) throw DivisionByZero();
        mpq_class q(num, den);
        q.canonicalize();
        return rational(q);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational: " + text);
    }
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? res_ == 1 % field_.modulus : rat_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    if (field_.is_prime_field()) {
        std::uint64_t p = field_.modulus;
        r.res_ = res_ + o.res_ >= p ? res_ + o.res_ - p : res_ + o.res_;
    } else {
        r.rat_ = rat_ + o.rat_;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    if (field_.is_prime_field())
        r.res_ = mul_mod(res_, o.res_, field_.modulus);
    else
        r.rat_ = rat_ * o.rat_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZero();
    Scalar r;
    r.field_ = field_;
    if (field_.is_prime_field())
        r.res_ = mul_mod(res_, inv_mod(o.res_, field_.modulus), field_.modulus);
    else
        r.rat_ = rat_ / o.rat_;
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.field_ = field_;
    if (field_.is_prime_field())
        r.res_ = res_ == 0 ? 0 : field_.modulus - res_;
    else
        r.rat_ = -rat_;
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime_field()) return std::to_string(res_);
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

} // namespace sba
