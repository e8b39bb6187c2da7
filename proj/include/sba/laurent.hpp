#ifndef SBA_LAURENT_HPP
#define SBA_LAURENT_HPP

#include <vector>

#include "sba/poly.hpp"

namespace sba {

// Truncated tail of a Laurent series in descending powers of x: coeff(i)
// is the coefficient of x^{-i} for i = 1..precision.  Coefficients beyond
// the precision are unknown, never implicitly zero.  A tail alone stands
// for a torus element of L/K[x].
class LaurentTail {
public:
    LaurentTail(const FieldDescriptor& f, std::vector<Scalar> coeffs);
    static LaurentTail zero(const FieldDescriptor& f, int precision);

    const FieldDescriptor& field() const { return field_; }
    int precision() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    // 1-based: coefficient of x^{-i}; requires 1 <= i <= precision.
    const Scalar& coeff(int i) const;

    bool known_zero() const; // all known coefficients vanish

    // Sum at the common (minimum) precision.
    LaurentTail operator+(const LaurentTail& o) const;

    LaurentTail truncated(int precision) const;

    bool operator==(const LaurentTail& o) const = default;

private:
    FieldDescriptor field_;
    std::vector<Scalar> coeffs_;
};

// Truncated element of L = K((x^-1)): polynomial part plus a tail.
struct LaurentElem {
    Poly poly_part;
    LaurentTail tail;

    LaurentElem(Poly p, LaurentTail t);
};

// Log-scale absolute value: the top degree among known coefficients.
// NEG_INFINITY for an element that is zero to its full known precision.
ExtendedInt abs_log(const Poly& f);
ExtendedInt abs_log(const LaurentElem& f);

// phi: drops the polynomial part; ker phi = K[x].
LaurentTail fractional_part(const LaurentElem& f);

// Distance to the nearest polynomial, on the log scale.  When all known
// coefficients vanish the value is unresolved: only ||t|| < e^{-precision}
// is known.
struct NormLog {
    ExtendedInt value;      // -i0 when resolved, NEG_INFINITY otherwise
    bool resolved;
    long long bound;        // unresolved: ||t|| < e^{bound}, bound = -precision
};

NormLog norm_log(const LaurentTail& t);

// Tail of p*t, at precision precision(t) - deg(p).  The coefficient of
// x^{-i} is sum_j p_j * a_{i+j}.  Throws PrecisionExhausted when
// deg(p) > precision(t); p = 0 acts as zero at full precision.
LaurentTail module_action(const Poly& p, const LaurentTail& t);

} // namespace sba

#endif
