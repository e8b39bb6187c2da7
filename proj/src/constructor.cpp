#include "sba/constructor.hpp"

#include <algorithm>

namespace sba {

namespace {

// Tuples of n nonnegative integers with component sum exactly s.
std::vector<std::vector<int>> tuples_with_sum(int n, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == n) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(i)] = v;
            self(self, i + 1, remaining - v);
        }
        cur[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, s);
    return out;
}

// Square shapes with U_new >= 1 whose new-column order is exactly L.
std::vector<ShapeProfile> shapes_at_column_order(int rows, int old_cols, int L) {
    std::vector<ShapeProfile> out;
    if (rows == 0) return out; // no rows, no square shape can use the column
    for (int u_new = 1; u_new <= L; ++u_new) {
        int max_v = L - u_new + 1;
        for (const auto& v : bounded_tuples(rows, rows * max_v)) {
            if (*std::max_element(v.begin(), v.end()) != max_v) continue;
            int sum_v = 0;
            for (int x : v) sum_v += x;
            int sum_old = sum_v - u_new;
            if (sum_old < 0) continue;
            for (auto u_old : tuples_with_sum(old_cols, sum_old)) {
                u_old.push_back(u_new);
                out.push_back({std::move(u_old), v});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Assembles the square matrix for a shape of the extended matrix; the new
// column's coefficient at index len(column[m]) + 1 comes from trial[m].
ExactMatrix assemble_extended(const TorusMatrix& base, const PartialColumn& column,
                              const std::vector<Scalar>& trial,
                              const ShapeProfile& shape) {
    int M = base.rows();
    int N = base.cols();
    ExactMatrix out(base.field(), shape.sum_v(), shape.sum_u());
    int row0 = 0;
    for (int m = 0; m < M; ++m) {
        int V = shape.row_degrees[static_cast<size_t>(m)];
        int col0 = 0;
        for (int n = 0; n <= N; ++n) {
            int U = shape.col_degrees[static_cast<size_t>(n)];
            if (U >= 1 && V >= 1) {
                if (n < N) {
                    ExactMatrix w = hankel_window(base.at(m, n), U, V);
                    for (int i = 0; i < V; ++i)
                        for (int j = 0; j < U; ++j)
                            out.at(row0 + i, col0 + j) = w.at(i, j);
                } else {
                    const auto& fixed = column[static_cast<size_t>(m)];
                    int known = static_cast<int>(fixed.size());
                    for (int i = 1; i <= V; ++i)
                        for (int j = 1; j <= U; ++j) {
                            int k = i + j - 1;
                            if (k <= known)
                                out.at(row0 + i - 1, col0 + j - 1) =
                                    fixed[static_cast<size_t>(k - 1)];
                            else if (k == known + 1)
                                out.at(row0 + i - 1, col0 + j - 1) =
                                    trial[static_cast<size_t>(m)];
                            else
                                throw Error("shape reaches beyond the current level");
                        }
                }
            }
            col0 += U;
        }
        row0 += V;
    }
    return out;
}

} // namespace

std::vector<AffineConstraint> constraints_at_order(const TorusMatrix& base,
                                                   const PartialColumn& column,
                                                   int order) {
    int M = base.rows();
    if (static_cast<int>(column.size()) != M)
        throw Error("partial column has wrong row count");
    std::vector<AffineConstraint> out;
    std::vector<Scalar> zeros(static_cast<size_t>(M), Scalar::zero(base.field()));
    for (const auto& shape : shapes_at_column_order(M, base.cols(), order)) {
        AffineConstraint c;
        c.provenance = shape;
        c.constant = exact_det(assemble_extended(base, column, zeros, shape));
        bool any_nonzero = false;
        for (int m = 0; m < M; ++m) {
            auto probe = zeros;
            probe[static_cast<size_t>(m)] = Scalar::one(base.field());
            Scalar rm = exact_det(assemble_extended(base, column, probe, shape)) -
                        c.constant;
            if (!rm.is_zero()) any_nonzero = true;
            c.linear.push_back(std::move(rm));
        }
        if (!any_nonzero)
            throw InductionBroken("no unknown reaches the determinant of shape " +
                                  shape.to_string() +
                                  "; a lower-order matrix must be singular");
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// 0, 1, -1, 2, -2, ...
long long stream_value(int i) {
    return i % 2 ? (i + 1) / 2 : -(i / 2);
}

bool satisfies_all(const std::vector<AffineConstraint>& constraints,
                   const std::vector<Scalar>& tuple) {
    for (const auto& c : constraints) {
        Scalar v = c.constant;
        for (size_t m = 0; m < tuple.size(); ++m)
            v = v + c.linear[m] * tuple[m];
        if (v.is_zero()) return false;
    }
    return true;
}

} // namespace

std::vector<Scalar> pick_avoiding(const std::vector<AffineConstraint>& constraints,
                                  const FieldDescriptor& field, int tuple_len,
                                  int* rejections) {
    if (field.is_prime_field()) throw InfiniteFieldRequired();
    if (tuple_len == 0) {
        if (!constraints.empty())
            throw Error("constraints on an empty tuple");
        if (rejections) *rejections = 0;
        return {};
    }
    int rejected = 0;
    // Tuples of stream indices grouped by their largest index t, ascending
    // lexicographically within a group.
    for (int t = 0; t < 1 << 20; ++t) {
        std::vector<int> idx(static_cast<size_t>(tuple_len), 0);
        auto rec = [&](auto&& self, int pos, bool has_t)
            -> std::optional<std::vector<Scalar>> {
            if (pos == tuple_len) {
                if (!has_t) return std::nullopt;
                std::vector<Scalar> tuple;
                tuple.reserve(idx.size());
                for (int i : idx)
                    tuple.push_back(Scalar::from_int(field, stream_value(i)));
                if (satisfies_all(constraints, tuple)) return tuple;
                ++rejected;
                return std::nullopt;
            }
            for (int i = 0; i <= t; ++i) {
                idx[static_cast<size_t>(pos)] = i;
                if (auto r = self(self, pos + 1, has_t || i == t)) return r;
            }
            return std::nullopt;
        };
        if (auto r = rec(rec, 0, false)) {
            if (rejections) *rejections = rejected;
            return *r;
        }
    }
    throw Error("candidate stream exhausted without an avoiding tuple");
}

ExtensionResult extend_with_column(const TorusMatrix& a_prime, int max_order) {
    if (a_prime.field().is_prime_field()) throw InfiniteFieldRequired();
    if (max_order < 1) throw Error("max_order must be positive");
    int M = a_prime.rows();
    int N = a_prime.cols();

    PartialColumn column(static_cast<size_t>(M));
    std::vector<int> rejections;
    std::vector<std::pair<ShapeProfile, Scalar>> checked;
    for (int L = 1; L <= max_order; ++L) {
        auto constraints = constraints_at_order(a_prime, column, L);
        int rej = 0;
        auto tuple = M == 0 ? std::vector<Scalar>{}
                            : pick_avoiding(constraints, a_prime.field(), M, &rej);
        rejections.push_back(rej);
        for (const auto& c : constraints) {
            Scalar det = c.constant;
            for (size_t m = 0; m < tuple.size(); ++m)
                det = det + c.linear[m] * tuple[m];
            if (det.is_zero())
                throw InductionBroken("chosen tuple leaves shape " +
                                      c.provenance.to_string() + " singular");
            checked.emplace_back(c.provenance, std::move(det));
        }
        for (int m = 0; m < M; ++m)
            column[static_cast<size_t>(m)].push_back(tuple[static_cast<size_t>(m)]);
    }

    TorusMatrix out(a_prime.field(), M, N + 1, max_order);
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n < N; ++n)
            out.set(m, n, a_prime.at(m, n).truncated(max_order));
        out.set(m, N, LaurentTail(a_prime.field(), column[static_cast<size_t>(m)]));
    }

    StarCertificate cert;
    cert.max_order = max_order;
    cert.field = a_prime.field();
    cert.checked_shapes = std::move(checked);
    return {std::move(out), std::move(cert), std::move(rejections)};
}

ExtensionResult extend_with_row(const TorusMatrix& a_prime, int max_order) {
    ExtensionResult r = extend_with_column(a_prime.transposed(), max_order);
    r.matrix = r.matrix.transposed();
    for (auto& [shape, det] : r.certificate.checked_shapes)
        shape = shape.transposed();
    return r;
}

GenerateResult generate(const FieldDescriptor& field, int rows, int cols,
                        int max_order) {
    if (field.is_prime_field()) throw InfiniteFieldRequired();
    if (rows < 0 || cols < 0 || max_order < 1)
        throw Error("bad generate arguments");

    GenerateResult result{TorusMatrix(field, 0, cols, max_order),
                          StarCertificate{},
                          "columns to " + std::to_string(cols) + ", then rows to " +
                              std::to_string(rows),
                          {}};

    if (rows == 0 || cols == 0) {
        result.matrix = TorusMatrix(field, rows, cols, max_order);
    } else {
        // Stage k appends row k; earlier stages run at amplified order
        // bounds so later levels can evaluate every determinant they need.
        std::vector<int> bounds(static_cast<size_t>(rows), max_order);
        for (int k = rows - 1; k >= 1; --k)
            bounds[static_cast<size_t>(k - 1)] =
                std::max(bounds[static_cast<size_t>(k)],
                         (cols + 1) * bounds[static_cast<size_t>(k)] - 2);

        TorusMatrix cur(field, 0, cols, bounds[0]);
        for (int k = 0; k < rows; ++k) {
            ExtensionResult ext =
                extend_with_row(cur, bounds[static_cast<size_t>(k)]);
            cur = std::move(ext.matrix);
            result.rejections_per_level.insert(result.rejections_per_level.end(),
                                               ext.rejections_per_level.begin(),
                                               ext.rejections_per_level.end());
        }
        result.matrix = std::move(cur);
    }

    // The recorded certificate is rebuilt from scratch over the final
    // matrix, so it covers shapes in every column, not just the last.
    StarResult check = star_check(result.matrix, max_order);
    if (!check.ok())
        throw InductionBroken("generated matrix fails its own star check at shape " +
                              check.failure->shape.to_string());
    result.certificate = std::move(*check.certificate);
    return result;
}

} // namespace sba
