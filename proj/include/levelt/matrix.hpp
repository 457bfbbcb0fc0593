#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "levelt/polynomial.hpp"

namespace levelt {

using Vector = std::vector<Scalar>;

// Dense exact matrix over cyclotomic scalars, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Scalar(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const Scalar& f) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const;
    Scalar trace() const;
    bool is_zero() const;

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    void set_row(std::size_t r, const Vector& v);
    void set_col(std::size_t c, const Vector& v);

    // Rows [r0, r1) and columns [c0, c1).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) const;

    Vector apply(const Vector& v) const; // matrix * column vector

    Vector flatten() const { return e_; } // row-major
    static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_cols(const std::vector<Vector>& cols);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

// Subspace of an ambient coordinate space, held as a canonical
// reduced-row-echelon basis (rows of `basis`). Canonical form makes
// equality a plain comparison.
class Subspace {
public:
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace span_rows(const Matrix& rows); // echelonizes, drops zero rows
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    // Image {A v : v in this} as a subspace of A's row count.
    Subspace apply(const Matrix& a) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    std::size_t ambient_;
    Matrix basis_;
};

Subspace subspace_intersect(const Subspace& u, const Subspace& v);

} // namespace levelt
