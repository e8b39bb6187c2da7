#include "sba/poly.hpp"

namespace sba {

Poly::Poly(const FieldDescriptor& f, std::vector<Scalar> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.field() != field_) throw FieldMismatch();
    trim();
}

Poly Poly::constant(const Scalar& c) {
    return Poly(c.field(), {c});
}

Poly Poly::monomial(const Scalar& c, int k) {
    if (c.is_zero()) return Poly(c.field());
    std::vector<Scalar> v(static_cast<size_t>(k) + 1, Scalar::zero(c.field()));
    v.back() = c;
    return Poly(c.field(), std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExtendedInt Poly::degree() const {
    if (coeffs_.empty()) return ExtendedInt::neg_infinity();
    return ExtendedInt(static_cast<long long>(coeffs_.size()) - 1);
}

Scalar Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return Scalar::zero(field_);
    return coeffs_[static_cast<size_t>(k)];
}

Poly Poly::operator+(const Poly& o) const {
    if (field_ != o.field_) throw FieldMismatch();
    std::vector<Scalar> v(std::max(coeffs_.size(), o.coeffs_.size()),
                          Scalar::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] + o.coeffs_[i];
    return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (field_ != o.field_) throw FieldMismatch();
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Scalar> v(coeffs_.size() + o.coeffs_.size() - 1,
                          Scalar::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
    return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Scalar> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Poly(field_, std::move(v));
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        if (coeffs_[static_cast<size_t>(k)].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string c = coeffs_[static_cast<size_t>(k)].to_string();
        if (k == 0) {
            s += c;
        } else {
            if (c != "1") s += "(" + c + ")*";
            s += k == 1 ? "x" : "x^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace sba
