#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "levelt/matrix.hpp"

namespace levelt {

// Reduced row echelon form with first-nonzero pivoting; returns the reduced
// matrix and the pivot column indices.
std::pair<Matrix, std::vector<std::size_t>> rref(Matrix m);

std::size_t rank(const Matrix& m);

// Canonical basis of {x : M x = 0}.
Subspace kernel_basis(const Matrix& m);

Scalar determinant(const Matrix& m); // throws on non-square
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m); // throws errc::singular

// Monic characteristic polynomial det(X*I - M) by the Faddeev-LeVerrier
// trace recurrence (exact in characteristic zero).
Polynomial char_poly(const Matrix& m);

// Companion matrix with ones on the subdiagonal and the negated
// coefficients down the last column: (k+1, k) = 1, last column
// (-a_0, ..., -a_{n-1})^T for p = X^n + a_{n-1} X^{n-1} + ... + a_0.
// Requires p monic with nonzero constant term.
Matrix companion(const Polynomial& p);

// Cyclic vector v with {v, A v, ..., A^{n-2} v} a basis of the hyperplane W.
// Requires dim W = n - 1 and the chain W, A^{-1}W, ..., A^{-(n-2)}W to meet
// in a line; errors with the offending dimension otherwise.
Vector krylov_cyclic_vector(const Matrix& a, const Subspace& w);

// Dimension of the unital algebra generated by the matrices, by closure of
// an echelonized spanning set under right multiplication by the generators.
// Equals n^2 exactly when the matrices act irreducibly.
std::size_t algebra_dimension(std::span<const Matrix> mats);

// Basis of {U : U G = H U}; with G = H this is the centralizer of G.
std::vector<Matrix> sylvester_kernel(const Matrix& g, const Matrix& h);

// Solves M x = b; empty optional when inconsistent.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& b);

// Deterministically extends `current` (assumed independent) to a basis of
// the ambient space by scanning standard basis vectors; returns the added
// vectors in scan order.
std::vector<Vector> complete_basis(const std::vector<Vector>& current, std::size_t ambient);

} // namespace levelt
