#ifndef SBA_CRITERION_HPP
#define SBA_CRITERION_HPP

#include <optional>
#include <vector>

#include "sba/hankel.hpp"

namespace sba {

// Scans run either on the serial reference path or the OpenMP one; both
// produce identical results (results are merged in canonical order).
enum class Exec { serial, parallel };

struct PolyVector {
    std::vector<Poly> entries;

    bool is_zero() const;
    std::string to_string() const;
    bool operator==(const PolyVector&) const = default;
};

struct DefectRecord {
    ShapeProfile shape;
    int dim = 0;
    int dirichlet_bound = 0;
    int defect = 0;
};

struct ScanWindow {
    int max_sum_u = 0;
    int max_sum_v = 0;
    int precision = 0;
};

struct DefectReport {
    std::vector<DefectRecord> per_shape;
    int c2_observed = 0;
    long long c1_derived = 0; // (M+N)^2 + (M+N) * c2_observed
    ScanWindow window;
};

struct ZeroFormWitness {
    PolyVector xi;
    int row = 0;           // index of the vanishing linear form
    long long zero_to = 0; // form tail certified zero to this depth
};

struct MinProductReport {
    std::optional<ExtendedInt> min_log; // empty when every xi hit a zero form
    PolyVector witness;
    std::vector<ZeroFormWitness> zero_forms;
    int degree_bound = 0;
};

// All tuples of `n` nonnegative integers with sum <= max_sum, ascending
// lexicographic.  Shared by the scan and star-check enumerations.
std::vector<std::vector<int>> bounded_tuples(int n, int max_sum);

// dim V(U;V) = sum U_n - rank of the assembled block matrix.
int solution_dim(const TorusMatrix& A, const ShapeProfile& shape);

// Basis of V(U;V) as polynomial vectors with deg xi_n < U_n.
std::vector<PolyVector> kernel_basis(const TorusMatrix& A,
                                     const ShapeProfile& shape);

// Membership in V(U;V), recomputed through the field kernel (degree checks
// plus vanishing of the leading V_m form coefficients).
bool in_solution_space(const TorusMatrix& A, const ShapeProfile& shape,
                       const PolyVector& xi);

// Log of the product in the approximation inequality:
//   sum_m norm_log(sum_n alpha_mn xi_n) + sum_n max(deg xi_n, 0).
// Throws ZeroVector for xi = 0 and ZeroLinearForm when a form vanishes to
// the full available precision.
ExtendedInt product_log(const TorusMatrix& A, const PolyVector& xi);

// Enumerates every shape with sum U <= max_sum_u and sum V <= max_sum_v and
// records dimension, Dirichlet bound and defect per shape.
DefectReport defect_scan(const TorusMatrix& A, int max_sum_u, int max_sum_v,
                         Exec exec = Exec::parallel);

// Exhaustive minimum of product_log over nonzero xi with deg xi_n < D.
// Finite fields only; zero-form hits are collected as disproof witnesses.
MinProductReport min_product_scan(const TorusMatrix& A, int degree_bound,
                                  Exec exec = Exec::parallel);

} // namespace sba

#endif
