#include "sba/criterion.hpp"

#include <algorithm>
#include <cstdint>

namespace sba {

bool PolyVector::is_zero() const {
    for (const auto& p : entries)
        if (!p.is_zero()) return false;
    return true;
}

std::string PolyVector::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ", ";
        s += entries[i].to_string();
    }
    return s + ")";
}

std::vector<std::vector<int>> bounded_tuples(int n, int max_sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(i)] = v;
            self(self, i + 1, remaining - v);
        }
        cur[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, max_sum);
    return out;
}

int solution_dim(const TorusMatrix& A, const ShapeProfile& shape) {
    BlockHankel b = assemble_block(A, shape);
    return shape.sum_u() - exact_rank(b.matrix);
}

std::vector<PolyVector> kernel_basis(const TorusMatrix& A,
                                     const ShapeProfile& shape) {
    BlockHankel b = assemble_block(A, shape);
    auto vectors = nullspace(b.matrix);
    std::vector<PolyVector> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) {
        PolyVector xi;
        size_t off = 0;
        for (int n = 0; n < A.cols(); ++n) {
            int U = shape.col_degrees[static_cast<size_t>(n)];
            std::vector<Scalar> coeffs(v.begin() + static_cast<long>(off),
                                       v.begin() + static_cast<long>(off + U));
            xi.entries.push_back(Poly(A.field(), std::move(coeffs)));
            off += static_cast<size_t>(U);
        }
        out.push_back(std::move(xi));
    }
    return out;
}

namespace {

// Tail of the m-th linear form sum_n alpha_mn xi_n at the largest common
// precision; zero entries of xi cost no precision.
LaurentTail form_tail(const TorusMatrix& A, const PolyVector& xi, int m) {
    std::optional<LaurentTail> acc;
    for (int n = 0; n < A.cols(); ++n) {
        const Poly& p = xi.entries[static_cast<size_t>(n)];
        if (p.is_zero()) continue;
        LaurentTail t = module_action(p, A.at(m, n));
        acc = acc ? *acc + t : t;
    }
    if (!acc) return LaurentTail::zero(A.field(), A.precision());
    return *acc;
}

} // namespace

bool in_solution_space(const TorusMatrix& A, const ShapeProfile& shape,
                       const PolyVector& xi) {
    if (static_cast<int>(xi.entries.size()) != A.cols())
        throw Error("vector length does not match matrix columns");
    for (int n = 0; n < A.cols(); ++n) {
        ExtendedInt d = xi.entries[static_cast<size_t>(n)].degree();
        if (d >= ExtendedInt(shape.col_degrees[static_cast<size_t>(n)]))
            return false;
    }
    for (int m = 0; m < A.rows(); ++m) {
        int V = shape.row_degrees[static_cast<size_t>(m)];
        if (V == 0) continue;
        LaurentTail t = form_tail(A, xi, m);
        if (t.precision() < V)
            throw PrecisionExhausted("form " + std::to_string(m) +
                                     " resolved only to depth " +
                                     std::to_string(t.precision()));
        for (int i = 1; i <= V; ++i)
            if (!t.coeff(i).is_zero()) return false;
    }
    return true;
}

ExtendedInt product_log(const TorusMatrix& A, const PolyVector& xi) {
    if (static_cast<int>(xi.entries.size()) != A.cols())
        throw Error("vector length does not match matrix columns");
    if (xi.is_zero()) throw ZeroVector();
    long long total = 0;
    for (int n = 0; n < A.cols(); ++n) {
        ExtendedInt d = xi.entries[static_cast<size_t>(n)].degree();
        if (d.is_finite() && d.value() > 0) total += d.value();
    }
    for (int m = 0; m < A.rows(); ++m) {
        LaurentTail t = form_tail(A, xi, m);
        NormLog nl = norm_log(t);
        if (!nl.resolved) throw ZeroLinearForm(m, -nl.bound);
        total += nl.value.value();
    }
    return ExtendedInt(total);
}

DefectReport defect_scan(const TorusMatrix& A, int max_sum_u, int max_sum_v,
                         Exec exec) {
    auto us = bounded_tuples(A.cols(), max_sum_u);
    auto vs = bounded_tuples(A.rows(), max_sum_v);
    std::vector<ShapeProfile> shapes;
    shapes.reserve(us.size() * vs.size());
    for (const auto& u : us)
        for (const auto& v : vs)
            shapes.push_back({u, v});
    std::sort(shapes.begin(), shapes.end());

    // Precision is checked up front so the first offending shape in
    // canonical order is the one reported.
    for (const auto& s : shapes)
        if (s.needed_precision() > A.precision())
            throw PrecisionExhausted("shape " + s.to_string() +
                                     " needs precision " +
                                     std::to_string(s.needed_precision()));

    std::vector<int> dims(shapes.size(), 0);
    long long count = static_cast<long long>(shapes.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < count; ++i)
            dims[static_cast<size_t>(i)] =
                solution_dim(A, shapes[static_cast<size_t>(i)]);
    } else {
        for (long long i = 0; i < count; ++i)
            dims[static_cast<size_t>(i)] =
                solution_dim(A, shapes[static_cast<size_t>(i)]);
    }

    DefectReport rep;
    rep.window = {max_sum_u, max_sum_v, A.precision()};
    for (size_t i = 0; i < shapes.size(); ++i) {
        DefectRecord r;
        r.shape = shapes[i];
        r.dim = dims[i];
        r.dirichlet_bound = std::max(0, shapes[i].sum_u() - shapes[i].sum_v());
        r.defect = r.dim - r.dirichlet_bound;
        if (r.defect < 0)
            throw Error("negative defect at shape " + r.shape.to_string());
        rep.c2_observed = std::max(rep.c2_observed, r.defect);
        rep.per_shape.push_back(std::move(r));
    }
    long long mn = A.rows() + A.cols();
    rep.c1_derived = mn * mn + mn * rep.c2_observed;
    return rep;
}

namespace {

// Decodes the idx-th candidate vector: mixed-radix digits over F_p, entry
// n's coefficient j at position n*D + j.
PolyVector decode_xi(const TorusMatrix& A, int D, std::uint64_t idx) {
    std::uint64_t p = A.field().modulus;
    PolyVector xi;
    for (int n = 0; n < A.cols(); ++n) {
        std::vector<Scalar> coeffs;
        coeffs.reserve(static_cast<size_t>(D));
        for (int j = 0; j < D; ++j) {
            coeffs.push_back(Scalar::residue(p, idx % p));
            idx /= p;
        }
        xi.entries.push_back(Poly(A.field(), std::move(coeffs)));
    }
    return xi;
}

struct ScanCell {
    bool has_value = false;
    long long value = 0;
    bool zero_form = false;
    int zero_row = 0;
    long long zero_to = 0;
};

ScanCell scan_one(const TorusMatrix& A, int D, std::uint64_t idx) {
    ScanCell cell;
    PolyVector xi = decode_xi(A, D, idx);
    try {
        cell.value = product_log(A, xi).value();
        cell.has_value = true;
    } catch (const ZeroLinearForm& z) {
        cell.zero_form = true;
        cell.zero_row = z.row;
        cell.zero_to = z.zero_to;
    }
    return cell;
}

} // namespace

MinProductReport min_product_scan(const TorusMatrix& A, int degree_bound,
                                  Exec exec) {
    if (!A.field().is_prime_field()) throw InfiniteField();
    if (degree_bound <= 0 || A.cols() == 0) throw EmptySearchSpace();
    std::uint64_t p = A.field().modulus;
    long long digits = static_cast<long long>(A.cols()) * degree_bound;
    std::uint64_t total = 1;
    for (long long i = 0; i < digits; ++i) {
        if (total > (1ull << 40) / p)
            throw Error("search space too large to enumerate");
        total *= p;
    }

    std::vector<ScanCell> cells(total);
    long long count = static_cast<long long>(total);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 1; i < count; ++i)
            cells[static_cast<size_t>(i)] =
                scan_one(A, degree_bound, static_cast<std::uint64_t>(i));
    } else {
        for (long long i = 1; i < count; ++i)
            cells[static_cast<size_t>(i)] =
                scan_one(A, degree_bound, static_cast<std::uint64_t>(i));
    }

    MinProductReport rep;
    rep.degree_bound = degree_bound;
    for (long long i = 1; i < count; ++i) {
        const ScanCell& c = cells[static_cast<size_t>(i)];
        if (c.zero_form) {
            rep.zero_forms.push_back({decode_xi(A, degree_bound,
                                                static_cast<std::uint64_t>(i)),
                                      c.zero_row, c.zero_to});
        } else if (c.has_value &&
                   (!rep.min_log || ExtendedInt(c.value) < *rep.min_log)) {
            rep.min_log = ExtendedInt(c.value);
            rep.witness = decode_xi(A, degree_bound, static_cast<std::uint64_t>(i));
        }
    }
    return rep;
}

} // namespace sba
