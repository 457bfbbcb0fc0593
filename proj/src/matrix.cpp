#include "levelt/matrix.hpp"

#include <sstream>

#include "levelt/error.hpp"
#include "levelt/linalg.hpp"

namespace levelt {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw error(errc::parse, "ragged matrix initializer");
        for (const auto& v : r) e_.push_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& v : m.e_) v = -v;
    return m;
}

namespace {
void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw error(errc::precondition, std::string("matrix shape mismatch in ") + what);
}
} // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "addition");
    Matrix m = a;
    for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] += b.e_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "subtraction");
    Matrix m = a;
    for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] -= b.e_[k];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw error(errc::precondition, "matrix shape mismatch in product");
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& f = a.at(i, k);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                m.at(i, j) += f * b.at(k, j);
            }
        }
    }
    return m;
}

Matrix Matrix::scaled(const Scalar& f) const {
    Matrix m = *this;
    for (auto& v : m.e_) v *= f;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Scalar Matrix::trace() const {
    if (!is_square()) throw error(errc::precondition, "trace of a non-square matrix");
    Scalar t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& v : e_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

Vector Matrix::col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
}

void Matrix::set_col(std::size_t c, const Vector& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v[i];
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) const {
    Matrix m(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) m.at(i - r0, j - c0) = at(i, j);
    return m;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw error(errc::precondition, "matrix-vector shape mismatch");
    Vector out(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        }
    return out;
}

Matrix Matrix::unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw error(errc::precondition, "unflatten size mismatch");
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < v.size(); ++k) m.e_[k] = v[k];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw error(errc::precondition, "ragged row list");
        m.set_row(i, rows[i]);
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vector>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw error(errc::precondition, "ragged column list");
        m.set_col(j, cols[j]);
    }
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix(0, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

Subspace Subspace::span_rows(const Matrix& rows) {
    auto [r, pivots] = rref(rows);
    return Subspace(rows.cols(), r.block(0, 0, pivots.size(), rows.cols()));
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    return span_rows(Matrix::from_rows(vectors, ambient_dim));
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw error(errc::precondition, "subspace ambient mismatch");
    // Reduce v against the echelon basis; membership iff the residue is 0.
    Vector r = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t piv = 0;
        while (piv < ambient_ && basis_.at(i, piv).is_zero()) ++piv;
        if (piv == ambient_) continue;
        if (r[piv].is_zero()) continue;
        Scalar f = r[piv]; // pivot entries are 1 in reduced form
        for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
    }
    for (const auto& x : r) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.basis_.rows(); ++i) {
        if (!contains(other.basis_.row(i))) return false;
    }
    return true;
}

Subspace Subspace::apply(const Matrix& a) const {
    std::vector<Vector> images;
    images.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) images.push_back(a.apply(basis_.row(i)));
    return Subspace::span(images, a.rows());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw error(errc::precondition, "subspace intersection: ambient dimension mismatch");
    const std::size_t n = u.ambient_dim();
    if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(n);
    // x in U cap V iff x = a^T Bu = b^T Bv; solve [Bu^T | -Bv^T] (a;b) = 0.
    Matrix m(n, u.dim() + v.dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < u.dim(); ++k) m.at(i, k) = u.basis().at(k, i);
        for (std::size_t k = 0; k < v.dim(); ++k) m.at(i, u.dim() + k) = -v.basis().at(k, i);
    }
    Subspace ker = kernel_basis(m);
    std::vector<Vector> pts;
    pts.reserve(ker.dim());
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vector coeffs = ker.basis().row(r);
        Vector x(n, Scalar(0));
        for (std::size_t k = 0; k < u.dim(); ++k) {
            if (coeffs[k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) x[j] += coeffs[k] * u.basis().at(k, j);
        }
        pts.push_back(std::move(x));
    }
    return Subspace::span(pts, n);
}

} // namespace levelt
