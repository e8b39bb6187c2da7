#ifndef SBA_HANKEL_HPP
#define SBA_HANKEL_HPP

#include <string>
#include <vector>

#include "sba/laurent.hpp"
#include "sba/matrix.hpp"

namespace sba {

// Column degrees (U_1..U_N) and row degrees (V_1..V_M) of a block shape.
struct ShapeProfile {
    std::vector<int> col_degrees; // U
    std::vector<int> row_degrees; // V

    int sum_u() const;
    int sum_v() const;
    bool square() const { return sum_u() == sum_v(); }

    ShapeProfile transposed() const { return {row_degrees, col_degrees}; }

    // Largest coefficient index any nonempty block consumes; 0 when every
    // block is empty.
    int needed_precision() const;

    std::string to_string() const; // "U1,..,UN;V1,..,VM"
    static ShapeProfile parse(const std::string& text);

    bool operator==(const ShapeProfile&) const = default;
    // Canonical enumeration order: (sum_u + sum_v, U-tuple, V-tuple).
    bool operator<(const ShapeProfile& o) const;
};

// M x N matrix of torus elements at one shared precision.
class TorusMatrix {
public:
    TorusMatrix(const FieldDescriptor& f, int rows, int cols, int precision);

    const FieldDescriptor& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int precision() const { return precision_; }

    const LaurentTail& at(int m, int n) const;
    void set(int m, int n, const LaurentTail& t); // precision must match

    TorusMatrix transposed() const;
    TorusMatrix truncated(int precision) const;

    bool operator==(const TorusMatrix& o) const;

private:
    FieldDescriptor field_;
    int rows_, cols_, precision_;
    std::vector<LaurentTail> entries_;
};

// Assembled block Hankel matrix together with its shape.
struct BlockHankel {
    ExactMatrix matrix; // sum_v rows, sum_u columns
    ShapeProfile shape;
};

// The V x U window with entry (i,j) = a_{i+j-1} (1-based); empty when
// U = 0 or V = 0.  Requires precision(alpha) >= U + V - 1 for nonempty
// windows.
ExactMatrix hankel_window(const LaurentTail& alpha, int U, int V);

// Block grid with block (m,n) = hankel_window(entry(m,n), U_n, V_m).
BlockHankel assemble_block(const TorusMatrix& A, const ShapeProfile& shape);

} // namespace sba

#endif
