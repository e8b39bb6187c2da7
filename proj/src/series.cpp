#include "sba/series.hpp"

#include <algorithm>

namespace sba {

std::vector<ShapeProfile> square_shapes_up_to_order(int rows, int cols,
                                                    int max_order) {
    // Nonzero components are capped by max_order through the pairwise
    // index bound, so the search box is finite.
    auto us = bounded_tuples(cols, cols * max_order);
    auto vs = bounded_tuples(rows, rows * max_order);
    std::vector<ShapeProfile> out;
    for (const auto& u : us) {
        if (std::any_of(u.begin(), u.end(),
                        [&](int x) { return x > max_order; }))
            continue;
        for (const auto& v : vs) {
            if (std::any_of(v.begin(), v.end(),
                            [&](int x) { return x > max_order; }))
                continue;
            ShapeProfile s{u, v};
            if (!s.square()) continue;
            if (s.needed_precision() > max_order) continue;
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ShapeProfile& a, const ShapeProfile& b) {
                  if (a.needed_precision() != b.needed_precision())
                      return a.needed_precision() < b.needed_precision();
                  return a < b;
              });
    return out;
}

StarResult star_check(const TorusMatrix& A, int max_order, Exec exec) {
    if (max_order < 1) throw Error("max_order must be positive");
    auto shapes = square_shapes_up_to_order(A.rows(), A.cols(), max_order);
    for (const auto& s : shapes)
        if (s.needed_precision() > A.precision())
            throw PrecisionExhausted("shape " + s.to_string() +
                                     " needs precision " +
                                     std::to_string(s.needed_precision()));

    std::vector<Scalar> dets(shapes.size(), Scalar::zero(A.field()));
    long long count = static_cast<long long>(shapes.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < count; ++i)
            dets[static_cast<size_t>(i)] =
                exact_det(assemble_block(A, shapes[static_cast<size_t>(i)]).matrix);
    } else {
        for (long long i = 0; i < count; ++i)
            dets[static_cast<size_t>(i)] =
                exact_det(assemble_block(A, shapes[static_cast<size_t>(i)]).matrix);
    }

    for (size_t i = 0; i < shapes.size(); ++i) {
        if (dets[i].is_zero()) {
            StarResult r;
            r.failure = FailureWitness{shapes[i],
                                       assemble_block(A, shapes[i]).matrix};
            return r;
        }
    }
    StarCertificate cert;
    cert.max_order = max_order;
    cert.field = A.field();
    for (size_t i = 0; i < shapes.size(); ++i)
        cert.checked_shapes.emplace_back(shapes[i], dets[i]);
    StarResult r;
    r.certificate = std::move(cert);
    return r;
}

LaurentTail exp_tail(const Scalar& lambda, int precision) {
    if (lambda.field().is_prime_field()) throw PositiveCharacteristic();
    std::vector<Scalar> coeffs;
    coeffs.reserve(static_cast<size_t>(precision));
    Scalar acc = Scalar::one(lambda.field()); // lambda^i / i!
    for (int i = 1; i <= precision; ++i) {
        acc = acc * lambda / Scalar::from_int(lambda.field(), i);
        coeffs.push_back(acc);
    }
    return LaurentTail(lambda.field(), std::move(coeffs));
}

LaurentTail binomial_tail(const Scalar& w, int precision) {
    if (w.field().is_prime_field()) throw PositiveCharacteristic();
    std::vector<Scalar> coeffs;
    coeffs.reserve(static_cast<size_t>(precision));
    Scalar binom = Scalar::one(w.field()); // binom(w, i)
    Scalar sign = Scalar::one(w.field());
    for (int i = 1; i <= precision; ++i) {
        binom = binom * (w - Scalar::from_int(w.field(), i - 1)) /
                Scalar::from_int(w.field(), i);
        sign = -sign;
        coeffs.push_back(sign * binom);
    }
    return LaurentTail(w.field(), std::move(coeffs));
}

LaurentTail SeriesSpec::build() const {
    return family == Family::exponential ? exp_tail(parameter, precision)
                                         : binomial_tail(parameter, precision);
}

} // namespace sba
