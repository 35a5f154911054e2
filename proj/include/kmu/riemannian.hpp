#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kmu/metric.hpp"
#include "kmu/report.hpp"

namespace kmu {

/// Levi-Civita connection and curvature of a left-invariant metric.
///
/// Connection from the Koszul formula
///   2<D_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>,
/// curvature with the convention R(x,y) = D_x D_y - D_y D_x - D_[x,y], so that
/// <R(x,y)y, x> is the (unnormalized) sectional curvature. All tables are
/// filled at construction and read-only afterwards.
template <Field S>
class CurvaturePackage {
public:
    explicit CurvaturePackage(MetricLieAlgebra<S> m);

    const MetricLieAlgebra<S>& metric() const { return m_; }
    std::size_t dim() const { return m_.dim(); }

    /// D_{e_i} e_j
    const Vector<S>& connection_basis(std::size_t i, std::size_t j) const { return gamma_[i * dim() + j]; }
    Vector<S> connection(const Vector<S>& x, const Vector<S>& y) const;

    /// R(e_i, e_j) e_k
    const Vector<S>& curvature_basis(std::size_t i, std::size_t j, std::size_t k) const {
        return r_[(i * dim() + j) * dim() + k];
    }
    Vector<S> curvature(const Vector<S>& x, const Vector<S>& y, const Vector<S>& z) const;
    /// <R(e_i, e_j) e_k, e_l>
    S riemann(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

    /// Ricci operator, Ric(x) = sum_{k,l} g^{kl} R(x, e_k) e_l (column i is Ric e_i).
    const Matrix<S>& ricci() const { return ricci_; }
    const S& scalar_curvature() const { return scalar_; }

    /// <R(x,y)y,x> / (|x|^2 |y|^2 - <x,y>^2); throws std::invalid_argument on a degenerate plane.
    S sectional(const Vector<S>& x, const Vector<S>& y) const;

private:
    MetricLieAlgebra<S> m_;
    std::vector<Vector<S>> gamma_;
    std::vector<Vector<S>> r_;
    Matrix<S> ricci_;
    S scalar_{};
};

template <Field S>
Vector<S> levi_civita(const MetricLieAlgebra<S>& m, const Vector<S>& x, const Vector<S>& y) {
    return CurvaturePackage<S>(m).connection(x, y);
}

template <Field S>
Vector<S> curvature(const MetricLieAlgebra<S>& m, const Vector<S>& x, const Vector<S>& y, const Vector<S>& z) {
    return CurvaturePackage<S>(m).curvature(x, y, z);
}

template <Field S>
Matrix<S> ricci_operator(const MetricLieAlgebra<S>& m) {
    return CurvaturePackage<S>(m).ricci();
}

template <Field S>
S sectional_curvature(const MetricLieAlgebra<S>& m, const Vector<S>& x, const Vector<S>& y) {
    return CurvaturePackage<S>(m).sectional(x, y);
}

struct SectionalMinimum {
    double value = 0.0;
    std::vector<double> x;  // witness plane, original basis coordinates
    std::vector<double> y;
};

/// Minimum of the sectional curvature over seeded random 2-planes, each
/// refined by `refine_steps` projected-gradient steps with backtracking.
/// Every value is attained by an actual plane, so the result is an upper
/// bound on the true minimum. Sample i draws from its own generator seeded
/// by (seed, i), so the result is independent of evaluation order.
template <Field S>
SectionalMinimum min_sectional_sampled(const MetricLieAlgebra<S>& m, std::size_t samples, std::uint64_t seed,
                                       std::size_t refine_steps);

/// <H0, x> = tr(ad_x).
template <Field S>
Vector<S> mean_curvature_vector(const MetricLieAlgebra<S>& m);

struct IwasawaResult {
    VerificationReport report;
    bool iwasawa = false;
    /// A0 with ad_{A0} positive definite on [s,s], when one was found.
    std::optional<std::vector<double>> witness;
    std::string witness_label;
};

/// Iwasawa type test. Condition (3) is decided by exact positive definiteness
/// on small integer combinations of the a-basis first, then by sign analysis
/// of the joint eigenvalues along the pencil for dim a <= 2; larger a yields
/// an indeterminate record. Throws std::invalid_argument for non-solvable input.
template <Field S>
IwasawaResult is_iwasawa_type(const MetricLieAlgebra<S>& m);

/// Same algebra written in a G-orthonormal basis (Cholesky frame); `frame`
/// receives the new basis vectors as columns in old coordinates.
MetricLieAlgebra<double> orthonormalize(const MetricLieAlgebra<double>& m, Matrix<double>* frame = nullptr);

}  // namespace kmu
