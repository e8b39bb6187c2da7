#include "sba/matrix.hpp"

#include <algorithm>

namespace sba {

ExactMatrix::ExactMatrix(const FieldDescriptor& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * static_cast<size_t>(cols),
            Scalar::zero(f)) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           data_ == o.data_;
}

namespace {

// Clears denominators column-wise; scales[j] is the lcm used for column j.
std::vector<std::vector<mpz_class>> to_integer_grid(const ExactMatrix& m,
                                                    std::vector<mpz_class>& scales) {
    std::vector<std::vector<mpz_class>> g(
        static_cast<size_t>(m.rows()),
        std::vector<mpz_class>(static_cast<size_t>(m.cols())));
    scales.assign(static_cast<size_t>(m.cols()), mpz_class(1));
    for (int c = 0; c < m.cols(); ++c) {
        mpz_class l = 1;
        for (int r = 0; r < m.rows(); ++r)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    m.at(r, c).rat().get_den().get_mpz_t());
        scales[static_cast<size_t>(c)] = l;
        for (int r = 0; r < m.rows(); ++r) {
            mpq_class v = m.at(r, c).rat() * l;
            g[static_cast<size_t>(r)][static_cast<size_t>(c)] = v.get_num();
        }
    }
    return g;
}

// Fraction-free elimination on an integer grid.  Returns the rank; when
// det_out is non-null (square input) also reports sign * final pivot.
int bareiss(std::vector<std::vector<mpz_class>>& g, int rows, int cols,
            mpz_class* det_out) {
    mpz_class prev = 1;
    int sign = 1;
    int row = 0, rank = 0;
    mpz_class last_pivot = 1;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (g[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) {
            std::swap(g[static_cast<size_t>(piv)], g[static_cast<size_t>(row)]);
            sign = -sign;
        }
        const mpz_class& p = g[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int r = row + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                mpz_class t = g[static_cast<size_t>(r)][static_cast<size_t>(c)] * p -
                              g[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                                  g[static_cast<size_t>(row)][static_cast<size_t>(c)];
                mpz_divexact(g[static_cast<size_t>(r)][static_cast<size_t>(c)].get_mpz_t(),
                             t.get_mpz_t(), prev.get_mpz_t());
            }
            g[static_cast<size_t>(r)][static_cast<size_t>(col)] = 0;
        }
        prev = p;
        last_pivot = p;
        ++rank;
        ++row;
    }
    if (det_out) *det_out = (rank == rows && rows == cols)
                                ? mpz_class(sign * last_pivot)
                                : mpz_class(0);
    return rank;
}

// Ordinary elimination over a prime field; returns rank, optionally det.
int prime_eliminate(const ExactMatrix& m, Scalar* det_out) {
    ExactMatrix g = m;
    Scalar det = Scalar::one(m.field());
    int row = 0, rank = 0;
    for (int col = 0; col < g.cols() && row < g.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < g.rows(); ++r)
            if (!g.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) {
            for (int c = 0; c < g.cols(); ++c)
                std::swap(g.at(piv, c), g.at(row, c));
            det = -det;
        }
        det = det * g.at(row, col);
        for (int r = row + 1; r < g.rows(); ++r) {
            if (g.at(r, col).is_zero()) continue;
            Scalar f = g.at(r, col) / g.at(row, col);
            for (int c = col; c < g.cols(); ++c)
                g.at(r, c) = g.at(r, c) - f * g.at(row, c);
        }
        ++rank;
        ++row;
    }
    if (det_out)
        *det_out = (rank == g.rows() && g.rows() == g.cols())
                       ? det
                       : Scalar::zero(m.field());
    return rank;
}

} // namespace

int exact_rank(const ExactMatrix& mat) {
    if (mat.rows() == 0 || mat.cols() == 0) return 0;
    if (mat.field().is_prime_field()) return prime_eliminate(mat, nullptr);
    std::vector<mpz_class> scales;
    auto g = to_integer_grid(mat, scales);
    return bareiss(g, mat.rows(), mat.cols(), nullptr);
}

Scalar exact_det(const ExactMatrix& mat) {
    if (mat.rows() != mat.cols()) throw NotSquare();
    if (mat.rows() == 0) return Scalar::one(mat.field());
    if (mat.field().is_prime_field()) {
        Scalar d = Scalar::zero(mat.field());
        prime_eliminate(mat, &d);
        return d;
    }
    std::vector<mpz_class> scales;
    auto g = to_integer_grid(mat, scales);
    mpz_class det_z;
    bareiss(g, mat.rows(), mat.cols(), &det_z);
    mpz_class denom = 1;
    for (const auto& s : scales) denom *= s;
    mpq_class q(det_z, denom);
    q.canonicalize();
    return Scalar::rational(q);
}

std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& mat) {
    ExactMatrix g = mat;
    int rows = g.rows(), cols = g.cols();
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (!g.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < cols; ++c) std::swap(g.at(piv, c), g.at(row, c));
        Scalar inv = Scalar::one(g.field()) / g.at(row, col);
        for (int c = col; c < cols; ++c) g.at(row, c) = g.at(row, c) * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || g.at(r, col).is_zero()) continue;
            Scalar f = g.at(r, col);
            for (int c = col; c < cols; ++c)
                g.at(r, c) = g.at(r, c) - f * g.at(row, c);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[static_cast<size_t>(free_c)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(cols), Scalar::zero(g.field()));
        v[static_cast<size_t>(free_c)] = Scalar::one(g.field());
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<size_t>(pivot_col[r])] =
                -g.at(static_cast<int>(r), free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace sba
