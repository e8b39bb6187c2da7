#ifndef SBA_CONSTRUCTOR_HPP
#define SBA_CONSTRUCTOR_HPP

#include "sba/series.hpp"

namespace sba {

// One nonsingularity requirement at the current level: the determinant of
// the shape in `provenance` equals constant + sum_m linear[m] * a_m, as a
// function of the undetermined coefficient tuple (a_1..a_M) of the new
// column.  At least one linear coefficient is nonzero for a sound input.
struct AffineConstraint {
    std::vector<Scalar> linear;
    Scalar constant;
    ShapeProfile provenance;
};

// Coefficients chosen so far for the column being appended; row m holds
// the values a^{(m)}_1 .. a^{(m)}_L in order.
using PartialColumn = std::vector<std::vector<Scalar>>;

// Constraints from every square shape with U_{new} >= 1 whose new-column
// order max_m(U_new + V_m - 1) is exactly `order`.  Throws InductionBroken
// when a constraint has no nonzero linear part (a lower-order matrix must
// have been singular).
std::vector<AffineConstraint> constraints_at_order(const TorusMatrix& base,
                                                   const PartialColumn& column,
                                                   int order);

// First tuple in the canonical candidate stream (integers 0, 1, -1, 2, -2,
// ... ordered by max-abs then lexicographically) violating no constraint.
// rejections, when given, receives the number of discarded candidates.
std::vector<Scalar> pick_avoiding(const std::vector<AffineConstraint>& constraints,
                                  const FieldDescriptor& field, int tuple_len,
                                  int* rejections = nullptr);

struct ExtensionResult {
    TorusMatrix matrix;
    StarCertificate certificate;
    std::vector<int> rejections_per_level;
};

// Appends one column, fixing its coefficients order by order up to
// max_order.  The result is truncated to precision max_order; the input
// must be precise (and star-certified) far enough for every determinant
// the levels consume.
ExtensionResult extend_with_column(const TorusMatrix& a_prime, int max_order);

// transpose . extend_with_column . transpose
ExtensionResult extend_with_row(const TorusMatrix& a_prime, int max_order);

struct GenerateResult {
    TorusMatrix matrix;
    StarCertificate certificate;
    std::string extension_order; // recorded build schedule
    std::vector<int> rejections_per_level;
};

// Grows the empty matrix to rows x cols (columns first, then rows) and
// certifies the result at max_order with a from-scratch star check.
// Intermediate stages run at amplified order bounds so every determinant
// the later stages need is available.
GenerateResult generate(const FieldDescriptor& field, int rows, int cols,
                        int max_order);

} // namespace sba

#endif
