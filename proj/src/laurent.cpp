#include "sba/laurent.hpp"

namespace sba {

LaurentTail::LaurentTail(const FieldDescriptor& f, std::vector<Scalar> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.field() != field_) throw FieldMismatch();
}

LaurentTail LaurentTail::zero(const FieldDescriptor& f, int precision) {
    return LaurentTail(f, std::vector<Scalar>(static_cast<size_t>(precision),
                                              Scalar::zero(f)));
}

const Scalar& LaurentTail::coeff(int i) const {
    if (i < 1 || i > precision())
        throw PrecisionExhausted("tail coefficient " + std::to_string(i) +
                                 " beyond precision " + std::to_string(precision()));
    return coeffs_[static_cast<size_t>(i - 1)];
}

bool LaurentTail::known_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

LaurentTail LaurentTail::operator+(const LaurentTail& o) const {
    if (field_ != o.field_) throw FieldMismatch();
    size_t p = std::min(coeffs_.size(), o.coeffs_.size());
    std::vector<Scalar> v;
    v.reserve(p);
    for (size_t i = 0; i < p; ++i) v.push_back(coeffs_[i] + o.coeffs_[i]);
    return LaurentTail(field_, std::move(v));
}

LaurentTail LaurentTail::truncated(int precision) const {
    if (precision > this->precision())
        throw PrecisionExhausted("cannot extend a tail beyond its precision");
    return LaurentTail(field_, std::vector<Scalar>(coeffs_.begin(),
                                                   coeffs_.begin() + precision));
}

LaurentElem::LaurentElem(Poly p, LaurentTail t)
    : poly_part(std::move(p)), tail(std::move(t)) {
    if (poly_part.field() != tail.field()) throw FieldMismatch();
}

ExtendedInt abs_log(const Poly& f) {
    return f.degree();
}

ExtendedInt abs_log(const LaurentElem& f) {
    if (!f.poly_part.is_zero()) return f.poly_part.degree();
    for (int i = 1; i <= f.tail.precision(); ++i)
        if (!f.tail.coeff(i).is_zero()) return ExtendedInt(-i);
    return ExtendedInt::neg_infinity();
}

LaurentTail fractional_part(const LaurentElem& f) {
    return f.tail;
}

NormLog norm_log(const LaurentTail& t) {
    for (int i = 1; i <= t.precision(); ++i)
        if (!t.coeff(i).is_zero())
            return {ExtendedInt(-i), true, 0};
    return {ExtendedInt::neg_infinity(), false, -t.precision()};
}

LaurentTail module_action(const Poly& p, const LaurentTail& t) {
    if (p.field() != t.field()) throw FieldMismatch();
    if (p.is_zero()) return LaurentTail::zero(t.field(), t.precision());
    int d = static_cast<int>(p.degree().value());
    if (d > t.precision())
        throw PrecisionExhausted("deg " + std::to_string(d) +
                                 " exceeds tail precision " +
                                 std::to_string(t.precision()));
    int out_prec = t.precision() - d;
    std::vector<Scalar> v;
    v.reserve(static_cast<size_t>(out_prec));
    for (int i = 1; i <= out_prec; ++i) {
        Scalar s = Scalar::zero(t.field());
        for (int j = 0; j <= d; ++j)
            s = s + p.coeff(j) * t.coeff(i + j);
        v.push_back(s);
    }
    return LaurentTail(t.field(), std::move(v));
}

} // namespace sba
