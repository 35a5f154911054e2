#pragma once

#include <cstddef>
#include <vector>

#include "kmu/lie_algebra.hpp"
#include "kmu/report.hpp"

namespace kmu {

template <Field S>
Vector<S> bracket_of(const LieAlgebra<S>& alg, const Vector<S>& x, const Vector<S>& y) {
    return alg.bracket(x, y);
}

template <Field S>
Matrix<S> ad_operator(const LieAlgebra<S>& alg, const Vector<S>& x) {
    return alg.ad(x);
}

/// Cyclic Jacobi sum over all basis triples. On failure the first violated
/// triple (i, j, k) and its residual vector are reported.
template <Field S>
VerificationReport validate_jacobi(const LieAlgebra<S>& alg);

/// span{[u, v] : u in a, v in b}
template <Field S>
Subspace<S> bracket_span(const LieAlgebra<S>& alg, const Subspace<S>& a, const Subspace<S>& b);

template <Field S>
Subspace<S> derived_algebra(const LieAlgebra<S>& alg);

template <Field S>
bool is_subalgebra(const LieAlgebra<S>& alg, const Subspace<S>& sub);

template <Field S>
bool is_ideal(const LieAlgebra<S>& alg, const Subspace<S>& sub);

struct SeriesReport {
    std::vector<std::size_t> derived_dims;        // dims of g, [g,g], ... until stable
    std::vector<std::size_t> lower_central_dims;  // dims of g, [g,g], [g,[g,g]], ... until stable
    bool solvable = false;
    bool nilpotent = false;
    /// Number of bracketings until zero (0 when the series does not terminate).
    std::size_t derived_length() const;
    std::size_t nilpotency_step() const;
};

template <Field S>
SeriesReport series_analysis(const LieAlgebra<S>& alg);

/// Series of a subalgebra, computed inside the ambient algebra.
template <Field S>
SeriesReport series_analysis(const LieAlgebra<S>& alg, const Subspace<S>& sub);

/// Maximal nilpotent ideal: starts from [g, g] and greedily adjoins basis
/// vectors, then verifies the result (ideal, nilpotent, contains [g, g], no
/// single basis-vector extension). Throws std::invalid_argument for
/// non-solvable input and std::logic_error if verification fails.
template <Field S>
Subspace<S> nilradical(const LieAlgebra<S>& alg);

/// Basis of Der(g) as matrices (column j is D e_j).
template <Field S>
std::vector<Matrix<S>> derivation_space(const LieAlgebra<S>& alg);

/// Max-norm of D[x,y] - [Dx,y] - [x,Dy] over basis pairs.
template <Field S>
S leibniz_defect(const LieAlgebra<S>& alg, const Matrix<S>& d);

/// B(x, y) = tr(ad x ad y) on the basis.
template <Field S>
Matrix<S> killing_form(const LieAlgebra<S>& alg);

/// Coordinates of m in the span of `basis` (as flattened matrices), if it lies there.
template <Field S>
std::optional<Vector<S>> span_coordinates(const std::vector<Matrix<S>>& basis, const Matrix<S>& m);

}  // namespace kmu
