#include "sba/hankel.hpp"

#include <numeric>
#include <sstream>

namespace sba {

int ShapeProfile::sum_u() const {
    return std::accumulate(col_degrees.begin(), col_degrees.end(), 0);
}

int ShapeProfile::sum_v() const {
    return std::accumulate(row_degrees.begin(), row_degrees.end(), 0);
}

int ShapeProfile::needed_precision() const {
    int need = 0;
    for (int u : col_degrees)
        for (int v : row_degrees)
            if (u >= 1 && v >= 1) need = std::max(need, u + v - 1);
    return need;
}

std::string ShapeProfile::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < col_degrees.size(); ++i)
        os << (i ? "," : "") << col_degrees[i];
    os << ";";
    for (size_t i = 0; i < row_degrees.size(); ++i)
        os << (i ? "," : "") << row_degrees[i];
    return os.str();
}

ShapeProfile ShapeProfile::parse(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw Error("shape must be \"U1,..,UN;V1,..,VM\": " + text);
    auto parse_list = [](const std::string& s) {
        std::vector<int> out;
        if (s.empty()) return out;
        std::istringstream is(s);
        std::string item;
        while (std::getline(is, item, ',')) {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size() || v < 0)
                throw Error("bad shape component: " + item);
            out.push_back(v);
        }
        return out;
    };
    return {parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1))};
}

bool ShapeProfile::operator<(const ShapeProfile& o) const {
    int a = sum_u() + sum_v(), b = o.sum_u() + o.sum_v();
    if (a != b) return a < b;
    if (col_degrees != o.col_degrees) return col_degrees < o.col_degrees;
    return row_degrees < o.row_degrees;
}

TorusMatrix::TorusMatrix(const FieldDescriptor& f, int rows, int cols,
                         int precision)
    : field_(f), rows_(rows), cols_(cols), precision_(precision),
      entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols),
               LaurentTail::zero(f, precision)) {
    if (rows < 0 || cols < 0 || precision < 0)
        throw Error("negative matrix dimension or precision");
}

const LaurentTail& TorusMatrix::at(int m, int n) const {
    return entries_[static_cast<size_t>(m) * cols_ + n];
}

void TorusMatrix::set(int m, int n, const LaurentTail& t) {
    if (t.field() != field_) throw FieldMismatch();
    if (t.precision() != precision_)
        throw Error("entry precision mismatch");
    entries_[static_cast<size_t>(m) * cols_ + n] = t;
}

TorusMatrix TorusMatrix::transposed() const {
    TorusMatrix t(field_, cols_, rows_, precision_);
    for (int m = 0; m < rows_; ++m)
        for (int n = 0; n < cols_; ++n)
            t.set(n, m, at(m, n));
    return t;
}

TorusMatrix TorusMatrix::truncated(int precision) const {
    TorusMatrix t(field_, rows_, cols_, precision);
    for (int m = 0; m < rows_; ++m)
        for (int n = 0; n < cols_; ++n)
            t.set(m, n, at(m, n).truncated(precision));
    return t;
}

bool TorusMatrix::operator==(const TorusMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           precision_ == o.precision_ && entries_ == o.entries_;
}

ExactMatrix hankel_window(const LaurentTail& alpha, int U, int V) {
    if (U < 0 || V < 0) throw Error("negative window dimension");
    ExactMatrix m(alpha.field(), V, U);
    if (U == 0 || V == 0) return m;
    if (alpha.precision() < U + V - 1)
        throw PrecisionExhausted("window " + std::to_string(U) + "x" +
                                 std::to_string(V) + " needs precision " +
                                 std::to_string(U + V - 1));
    for (int i = 1; i <= V; ++i)
        for (int j = 1; j <= U; ++j)
            m.at(i - 1, j - 1) = alpha.coeff(i + j - 1);
    return m;
}

BlockHankel assemble_block(const TorusMatrix& A, const ShapeProfile& shape) {
    if (static_cast<int>(shape.col_degrees.size()) != A.cols() ||
        static_cast<int>(shape.row_degrees.size()) != A.rows())
        throw Error("shape does not match matrix dimensions");
    if (shape.needed_precision() > A.precision())
        throw PrecisionExhausted("shape " + shape.to_string() +
                                 " needs precision " +
                                 std::to_string(shape.needed_precision()));
    ExactMatrix out(A.field(), shape.sum_v(), shape.sum_u());
    int row0 = 0;
    for (int m = 0; m < A.rows(); ++m) {
        int col0 = 0;
        int V = shape.row_degrees[static_cast<size_t>(m)];
        for (int n = 0; n < A.cols(); ++n) {
            int U = shape.col_degrees[static_cast<size_t>(n)];
            if (U >= 1 && V >= 1) {
                ExactMatrix w = hankel_window(A.at(m, n), U, V);
                for (int i = 0; i < V; ++i)
                    for (int j = 0; j < U; ++j)
                        out.at(row0 + i, col0 + j) = w.at(i, j);
            }
            col0 += U;
        }
        row0 += V;
    }
    return {std::move(out), shape};
}

} // namespace sba
