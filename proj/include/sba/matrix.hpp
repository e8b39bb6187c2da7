#ifndef SBA_MATRIX_HPP
#define SBA_MATRIX_HPP

#include <vector>

#include "sba/scalar.hpp"

namespace sba {

// Dense matrix of exact field elements.  Zero dimensions are legal; the
// empty matrix has rank 0 and the 0x0 determinant is 1.
class ExactMatrix {
public:
    ExactMatrix(const FieldDescriptor& f, int rows, int cols);

    const FieldDescriptor& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    ExactMatrix transposed() const;

    bool operator==(const ExactMatrix& o) const;

private:
    FieldDescriptor field_;
    int rows_, cols_;
    std::vector<Scalar> data_;
};

// Rank over the exact field.  Rationals go through fraction-free (Bareiss)
// elimination after clearing denominators column-wise; prime fields use
// ordinary elimination.  Pivots are the first nonzero entry in column order.
int exact_rank(const ExactMatrix& mat);

// Exact determinant; throws NotSquare.  det(0x0) = 1.
Scalar exact_det(const ExactMatrix& mat);

// Basis of the right nullspace {v : mat v = 0}, via reduced row echelon
// form; one basis vector per free column, in ascending column order.
std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& mat);

} // namespace sba

#endif
