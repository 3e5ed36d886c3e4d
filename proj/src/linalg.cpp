#include "zinbiel/linalg.hpp"

#include <stdexcept>

namespace zinbiel {

namespace {

void require_same_length(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch");
}

} // namespace

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_length(a, b);
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_length(a, b);
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_scale(const Rational& c, const Vec& v) {
    Vec out(v);
    for (auto& x : out) x *= c;
    return out;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = Rational(1);
    return v;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) throw std::invalid_argument("no columns");
    const std::size_t rows = cols.front().size();
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vec Matrix::vectorize() const { return data_; }

Matrix Matrix::from_vectorized(const Vec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols)
        throw std::invalid_argument("vectorized length does not match shape");
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix out(m);
    for (auto& x : out.data_) x *= c;
    return out;
}

RrefResult rref(const Matrix& m) {
    if (m.empty()) throw std::invalid_argument("rref of an empty matrix");
    Matrix a(m);
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a.at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
        const Rational inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const Rational f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return RrefResult{std::move(a), r};
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vec> basis;
    basis.reserve(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        basis.push_back(basis_vec(ambient_dim, i));
    return Subspace(ambient_dim, std::move(basis));
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("vector does not match ambient dimension");
    Vec r(v);
    for (const Vec& b : basis_) {
        std::size_t pivot = 0;
        while (pivot < ambient_ && b[pivot].is_zero()) ++pivot;
        if (pivot == ambient_ || r[pivot].is_zero()) continue;
        const Rational f = r[pivot];
        for (std::size_t j = pivot; j < ambient_; ++j) r[j] -= f * b[j];
    }
    return r;
}

Subspace span(const std::vector<Vec>& vectors) {
    if (vectors.empty())
        throw std::invalid_argument("span of an empty list has no ambient dimension");
    const std::size_t ambient = vectors.front().size();
    Matrix m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient)
            throw std::invalid_argument("span: mixed vector lengths");
        for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
    }
    if (ambient == 0) return Subspace(0);
    RrefResult r = rref(m);
    std::vector<Vec> basis;
    basis.reserve(r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) basis.push_back(r.matrix.row(i));
    return Subspace(ambient, std::move(basis));
}

Subspace nullspace(const Matrix& m) {
    if (m.empty()) throw std::invalid_argument("nullspace of an empty matrix");
    const std::size_t cols = m.cols();
    RrefResult r = rref(m);

    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::size_t c = 0;
        while (c < cols && r.matrix.at(i, c).is_zero()) ++c;
        pivot_col_of_row.push_back(c);
        is_pivot[c] = true;
    }

    std::vector<Vec> kernel;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec x(cols);
        x[f] = Rational(1);
        for (std::size_t i = 0; i < r.rank; ++i)
            x[pivot_col_of_row[i]] = -r.matrix.at(i, f);
        kernel.push_back(std::move(x));
    }
    if (kernel.empty()) return Subspace::zero(cols);
    return span(kernel);
}

} // namespace zinbiel
