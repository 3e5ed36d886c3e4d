#pragma once

/*
 * Exact linear algebra over the rationals.
 *
 * Everything downstream (derivation spaces, annihilators, table dimensions)
 * reduces to three kernels: reduced row-echelon form, nullspace, and span.
 * All of them return canonical data: the RREF of a matrix is unique, so a
 * subspace handed out by this header has a unique basis (leftmost pivots,
 * unit pivots, pivot columns otherwise clear) and equality of subspaces is
 * plain equality of bases.  No floating point anywhere; every operation is
 * a pure function returning fresh values.
 */

#include "zinbiel/rational.hpp"

#include <cstddef>
#include <vector>

namespace zinbiel {

using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Coordinates of the i-th standard basis vector in dimension n.
Vec basis_vec(std::size_t n, std::size_t i);

/// Dense rational matrix.  When a Matrix represents a linear map, column i
/// holds the coordinates of the image of the i-th basis vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;

    Matrix transpose() const;

    /// Row-major flattening; the vectorization used to span spaces of matrices.
    Vec vectorize() const;
    static Matrix from_vectorized(const Vec& v, std::size_t rows, std::size_t cols);

    /// Matrix-vector product (v as a column vector).
    Vec apply(const Vec& v) const;

    bool is_zero() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank = 0;
};

/// Unique reduced row-echelon form.  Throws std::invalid_argument on an
/// empty matrix.
RrefResult rref(const Matrix& m);

/// Linear subspace of Q^ambient held as a canonical RREF basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    Subspace(std::size_t ambient_dim, std::vector<Vec> rref_basis)
        : ambient_(ambient_dim), basis_(std::move(rref_basis)) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    /// Residual of v after elimination against the basis; zero iff v lies
    /// in the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

/// Canonical basis of {v : m v = 0}.
Subspace nullspace(const Matrix& m);

/// Canonical basis of the span of the given vectors (at least one vector,
/// all of one length; throws std::invalid_argument otherwise).
Subspace span(const std::vector<Vec>& vectors);

} // namespace zinbiel
