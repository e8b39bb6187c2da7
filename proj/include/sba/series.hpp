#ifndef SBA_SERIES_HPP
#define SBA_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "sba/criterion.hpp"
#include "sba/hankel.hpp"

namespace sba {

// Finite-window certificate that every enumerated square block Hankel
// matrix is nonsingular.  Lists each checked shape with its determinant so
// the certificate can be re-verified without rerunning anything.
struct StarCertificate {
    std::string matrix_id;
    int max_order = 0;
    FieldDescriptor field;
    std::vector<std::pair<ShapeProfile, Scalar>> checked_shapes;
};

struct FailureWitness {
    ShapeProfile shape;
    ExactMatrix matrix;
};

struct StarResult {
    std::optional<StarCertificate> certificate;
    std::optional<FailureWitness> failure;

    bool ok() const { return certificate.has_value(); }
};

// All square shapes (sum U = sum V) whose assembly only needs coefficients
// of index <= max_order, in canonical order (needed index, then shape).
std::vector<ShapeProfile> square_shapes_up_to_order(int rows, int cols,
                                                    int max_order);

// Verifies exact_det != 0 for every such shape; on failure returns the
// first failing shape in canonical order with its singular matrix.
StarResult star_check(const TorusMatrix& A, int max_order,
                      Exec exec = Exec::parallel);

// Tail of e^{lambda/x}: coefficient of x^{-i} is lambda^i / i!.
LaurentTail exp_tail(const Scalar& lambda, int precision);

// Tail of (1-y)^w evaluated at y = x^{-1}: coefficient of x^{-i} is
// (-1)^i * binom(w, i).  A nonnegative-integer w terminates the series;
// the tail is still produced (it is eventually zero).
LaurentTail binomial_tail(const Scalar& w, int precision);

// Series families constructible from CLI arguments.
struct SeriesSpec {
    enum class Family { exponential, binomial };
    Family family;
    Scalar parameter;
    int precision;

    LaurentTail build() const;
};

} // namespace sba

#endif
