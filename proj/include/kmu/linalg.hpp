#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kmu/matrix.hpp"

namespace kmu {

/// Relative rank tolerance for the float backend: pivots below
/// kRankRelTol * (largest entry of the input) count as zero.
inline constexpr double kRankRelTol = 1e-9;

template <Field S>
struct Echelon {
    Matrix<S> reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. Exact backend: first nonzero pivot, exact zero
/// tests. Float backend: partial pivoting with a relative rank tolerance.
template <Field S>
Echelon<S> rref(Matrix<S> m, double rel_tol = kRankRelTol);

template <Field S>
std::size_t rank(const Matrix<S>& m, double rel_tol = kRankRelTol);

/// Basis of {x : m x = 0}, one vector per free column (echelon normalized).
template <Field S>
std::vector<Vector<S>> nullspace(const Matrix<S>& m, double rel_tol = kRankRelTol);

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <Field S>
std::optional<Vector<S>> solve(const Matrix<S>& a, const Vector<S>& b, double rel_tol = kRankRelTol);

/// Throws std::domain_error on a singular matrix.
template <Field S>
Matrix<S> inverse(const Matrix<S>& m);

template <Field S>
S determinant(Matrix<S> m);

template <Field S>
struct LeastSquares {
    Vector<S> x;
    S residual{};        // max-norm of a x - b
    std::size_t rank = 0;
};

/// Minimizes |a x - b|_2. Exact backend solves the normal equations exactly
/// (free variables set to zero); float backend uses a complete orthogonal
/// decomposition.
template <Field S>
LeastSquares<S> least_squares(const Matrix<S>& a, const Vector<S>& b);

/// Symmetric positive definiteness by an unpivoted LDL^T factorization.
template <Field S>
bool is_positive_definite(const Matrix<S>& m, double rel_tol = kRankRelTol);

template <Field S>
bool is_symmetric(const Matrix<S>& m, double tol = kStructuralTol);

/// m^n == 0 for an n x n matrix.
template <Field S>
bool is_nilpotent_matrix(const Matrix<S>& m, double tol = kStructuralTol);

/// Eigenvalues of a real symmetric matrix, ascending.
std::vector<double> symmetric_eigenvalues(const Matrix<double>& m);

/// Real parts of the eigenvalues of a general real matrix.
std::vector<double> eigenvalue_real_parts(const Matrix<double>& m);

/// Cholesky factor L (lower) with m = L L^T; throws if not positive definite.
Matrix<double> cholesky(const Matrix<double>& m);

}  // namespace kmu
