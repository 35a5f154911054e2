#pragma once

#include <string>
#include <vector>

#include "kmu/lie_algebra.hpp"

namespace kmu {

/// Lie algebra with a positive definite inner product given by its Gram matrix.
template <Field S>
class MetricLieAlgebra {
public:
    MetricLieAlgebra() = default;
    /// Orthonormal basis.
    explicit MetricLieAlgebra(LieAlgebra<S> alg);
    /// Throws std::invalid_argument unless gram is symmetric positive definite.
    MetricLieAlgebra(LieAlgebra<S> alg, Matrix<S> gram);

    const LieAlgebra<S>& algebra() const { return alg_; }
    const std::string& name() const { return alg_.name(); }
    std::size_t dim() const { return alg_.dim(); }
    const Matrix<S>& gram() const { return gram_; }
    const Matrix<S>& gram_inverse() const { return gram_inv_; }
    bool orthonormal() const { return orthonormal_; }

    S inner(const Vector<S>& x, const Vector<S>& y) const;
    /// Metric transpose: <A^t x, y> = <x, A y>.
    Matrix<S> adjoint(const Matrix<S>& a) const;
    /// Vector metrically dual to the covector w (w(x) = <v, x>).
    Vector<S> raise(const Vector<S>& covector) const { return gram_inv_ * covector; }
    /// Covector x -> <v, x>.
    Vector<S> lower(const Vector<S>& v) const { return gram_ * v; }

    MetricLieAlgebra with_gram(Matrix<S> gram) const { return MetricLieAlgebra(alg_, std::move(gram)); }

private:
    LieAlgebra<S> alg_;
    Matrix<S> gram_;
    Matrix<S> gram_inv_;
    bool orthonormal_ = true;
};

/// Basis of the orthogonal complement of `sub` (echelon normalized).
template <Field S>
std::vector<Vector<S>> orthogonal_complement(const MetricLieAlgebra<S>& m, const Subspace<S>& sub);

/// Subalgebra spanned by `basis` (ambient coordinates) with the restricted
/// inner product. Throws std::invalid_argument if the span is not closed
/// under the bracket or the vectors are dependent.
template <Field S>
MetricLieAlgebra<S> restrict_to_basis(const MetricLieAlgebra<S>& m, const std::vector<Vector<S>>& basis,
                                      std::vector<std::string> labels, std::string name);

/// Coordinates of an ambient vector in the given basis (nullopt if outside the span).
template <Field S>
std::optional<Vector<S>> coordinates_in(const std::vector<Vector<S>>& basis, const Vector<S>& v);

/// Human-readable linear combination of basis labels, e.g. "A1+2*A2".
template <Field S>
std::string combination_label(const std::vector<std::string>& labels, const Vector<S>& v);

template <Field To, Field From>
MetricLieAlgebra<To> convert_metric(const MetricLieAlgebra<From>& m) {
    return MetricLieAlgebra<To>(convert_algebra<To>(m.algebra()), convert_matrix<To>(m.gram()));
}

}  // namespace kmu
