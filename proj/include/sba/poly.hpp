#ifndef SBA_POLY_HPP
#define SBA_POLY_HPP

#include <vector>

#include "sba/scalar.hpp"

namespace sba {

// Element of K[x], coefficients ascending by power of x.  Canonical form:
// no trailing zero coefficients; the zero polynomial has an empty list.
class Poly {
public:
    explicit Poly(const FieldDescriptor& f) : field_(f) {}
    Poly(const FieldDescriptor& f, std::vector<Scalar> coeffs);

    static Poly zero(const FieldDescriptor& f) { return Poly(f); }
    static Poly constant(const Scalar& c);
    // c * x^k
    static Poly monomial(const Scalar& c, int k);

    const FieldDescriptor& field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    // degree(0) = NEG_INFINITY
    ExtendedInt degree() const;

    // Coefficient of x^k, zero beyond the stored range.
    Scalar coeff(int k) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void trim();

    FieldDescriptor field_;
    std::vector<Scalar> coeffs_;
};

} // namespace sba

#endif
