#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kmu/contact.hpp"
#include "kmu/metric.hpp"

namespace kmu {

/// Contact metric algebra g(alpha, beta) of dimension 2n+1, n >= 2, on the
/// orthonormal basis xi, X1..Xn, Y1..Yn with phi X_i = Y_i, phi Y_i = -X_i.
template <Field S>
ContactMetricAlgebra<S> build_g_alpha_beta(const S& alpha, const S& beta, std::size_t n);

/// beta > alpha >= 0, the range where g(alpha, beta) is a (kappa, mu)-space.
/// Outside it the algebra is still built; callers may warn.
template <Field S>
bool in_kappa_mu_range(const S& alpha, const S& beta) {
    return !(alpha < S(0)) && alpha < beta;
}

/// kappa = 1 - (beta^2 - alpha^2)^2 / 16, mu = 2 + (alpha^2 + beta^2) / 2.
/// Throws std::invalid_argument unless beta > alpha.
template <Field S>
std::pair<S, S> closed_form_kappa_mu(const S& alpha, const S& beta) {
    if (!(alpha < beta)) throw std::invalid_argument("closed_form_kappa_mu needs beta > alpha");
    const S d = beta * beta - alpha * alpha;
    return {S(1) - d * d / S(16), S(2) + (alpha * alpha + beta * beta) / S(2)};
}

/// Heisenberg algebra xi, X1..Xn, Y1..Yn, [X_i, Y_i] = 2 xi, with its Sasakian structure.
template <Field S>
ContactMetricAlgebra<S> build_heisenberg(std::size_t n);

/// Solvable model s(c) with m >= 1 pairs on the orthonormal basis
/// A1, A2, X0, Y1..Ym, Z1..Zm, W0, and its complex structure
/// J A1 = -X0, J A2 = W0, J Y_i = Z_i. Throws std::invalid_argument unless c > 0.
template <Field S>
HermitianAlgebra<S> build_solvable_model(const S& c, std::size_t m);

/// Einstein constant of s(c): -(c^2 + m c^2 / 2).
template <Field S>
S solvable_model_einstein_constant(const S& c, std::size_t m) {
    return -(c * c + S(static_cast<long>(m)) * c * c / S(2));
}

/// Mean curvature vector coordinates of s(c): c A1 + (m + 1) c A2.
template <Field S>
Vector<S> solvable_model_mean_curvature(const S& c, std::size_t m);

/// [A, X] = X: the real hyperbolic plane of curvature -1.
template <Field S>
MetricLieAlgebra<S> build_hyperbolic_plane();

/// Abelian algebra with the flat metric.
template <Field S>
MetricLieAlgebra<S> build_flat(std::size_t dim);

// ---- so(2, n) --------------------------------------------------------------

using ExactMatrix = Matrix<QSqrt2>;

struct MatrixBasis {
    std::vector<std::string> labels;
    std::vector<ExactMatrix> elements;
};

/// diag(-1, -1, 1, ..., 1) of size n + 2.
ExactMatrix indefinite_form(std::size_t n);

/// X^t I + I X == 0
bool in_so2n(const ExactMatrix& x, std::size_t n);

/// Basis I (E_ij - E_ji), i < j, of so(2, n).
MatrixBasis so2n_basis(std::size_t n);

/// theta(X) = I X I
ExactMatrix cartan_involution(const ExactMatrix& x, std::size_t n);

/// so(2, n) with its Cartan decomposition k + p (theta = +1, -1).
struct MatrixAlgebra {
    std::size_t n = 0;
    ExactMatrix form;  // I_{2,n}
    MatrixBasis basis;
    MatrixBasis k;
    MatrixBasis p;
    /// H1 = E13 + E31, H2 = E24 + E42 (1-based), spanning a.
    std::array<ExactMatrix, 2> a;
    /// Z = E12 - E21, the element of the center of k defining the complex structure on p.
    ExactMatrix z;
};

MatrixAlgebra build_so2n(std::size_t n);

/// Iwasawa subalgebra a + n of so(2, n), n >= 3, in the basis
/// A1, A2, X0, Y1..Y_{n-2}, Z1..Z_{n-2}, W0 scaled by c.
MatrixBasis build_so2n_iwasawa(std::size_t n, const QSqrt2& c);

/// J = pi^{-1} o ad(Z) o pi on the Iwasawa basis, pi(X) = (X - theta X) / 2.
/// Column c is J of basis element c.
ExactMatrix iwasawa_complex_structure(std::size_t n, const QSqrt2& c);

/// (ad Z restricted to p)^2 == -id
bool ad_z_squares_to_minus_one(const MatrixAlgebra& g);

/// Gram matrix of <X, Y> = (1/c^2) tr(X_a Y_a) + (1/(2c^2)) tr(X_n^t Y_n) on the
/// Iwasawa basis (first two elements span a, the rest n).
ExactMatrix iwasawa_model_gram(const MatrixBasis& basis, const QSqrt2& c);

/// Structure constants of a basis of matrices closed under the commutator.
/// Throws std::invalid_argument if some commutator leaves the span.
LieAlgebra<QSqrt2> matrix_structure_constants(const MatrixBasis& basis, std::string name);

struct RootSpace {
    std::array<long, 2> root{};  // values on H1 = E13 + E31, H2 = E24 + E42
    std::size_t dim = 0;
    std::vector<ExactMatrix> space;  // basis of the root space
};

struct RootDatum {
    std::vector<RootSpace> roots;   // nonzero restricted roots
    std::size_t zero_dim = 0;       // centralizer of a
    std::size_t total_dim = 0;      // dim so(2, n)
    std::vector<RootSpace> positive;  // first nonzero coordinate positive
    std::vector<RootSpace> simple;
    /// sum of root-space dims plus zero_dim equals total_dim (ad a diagonalizable)
    bool complete() const;
};

/// Joint eigenspaces of ad H1, ad H2 on so(2, n).
RootDatum root_space_decomposition(std::size_t n);

/// k' with B(X, Y) = k' tr(XY) on so(2, n); throws std::logic_error if the
/// Killing form is not proportional to the trace form.
QSqrt2 killing_trace_ratio(std::size_t n);

/// -|delta|^2 for the highest restricted root delta, measured with the metric
/// (1/c^2) tr(XY) on a. This is the minimum sectional curvature of the model.
QSqrt2 highest_root_curvature(std::size_t n, const QSqrt2& c);

// ---- hypersurface -----------------------------------------------------------

/// Ambient vectors of the hypersurface basis xi, xi_perp, T, Y1..Y_{n-1},
/// Z1..Z_{n-1} inside s(2 sqrt 2) with n - 1 pairs, and its unit normal.
struct HypersurfaceData {
    HermitianAlgebra<QSqrt2> ambient;
    std::vector<Vector<QSqrt2>> basis;
    std::vector<std::string> labels;
    Vector<QSqrt2> normal;
};

HypersurfaceData s_N_data(std::size_t n);

/// Hypersurface s_N of s(2 sqrt 2), dimension 2n + 1, n >= 2, with the induced structure.
ContactMetricAlgebra<QSqrt2> build_s_N(std::size_t n);

/// Isomorphism s_N -> g(0, 2) of dimension 2n + 1 (column c = image of source basis vector c).
ExactMatrix s_N_to_g02_map(std::size_t n);

// ---- listing ------------------------------------------------------------------

struct CatalogFamily {
    std::string name;
    std::string parameters;
    std::string description;
};

const std::vector<CatalogFamily>& catalog_families();

}  // namespace kmu
