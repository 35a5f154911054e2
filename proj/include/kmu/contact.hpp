#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmu/metric.hpp"
#include "kmu/report.hpp"

namespace kmu {

/// (xi, eta, phi) on a Lie algebra. eta is a covector in the dual basis;
/// column c of phi is phi(e_c).
template <Field S>
struct AlmostContactStructure {
    Vector<S> xi;
    Vector<S> eta;
    Matrix<S> phi;
};

template <Field S>
struct ContactMetricAlgebra {
    MetricLieAlgebra<S> metric;
    AlmostContactStructure<S> structure;

    const LieAlgebra<S>& algebra() const { return metric.algebra(); }
    const std::string& name() const { return metric.name(); }
    std::size_t dim() const { return metric.dim(); }
};

/// Axioms of a contact metric structure, one record each:
/// eta(xi) = 1, phi xi = 0, eta o phi = 0, phi^2 = -I + eta (x) xi,
/// g(phi x, phi y) = g(x, y) - eta(x) eta(y), eta = g(xi, .),
/// g(x, phi y) = d eta(x, y) with d eta(x, y) = -1/2 eta([x, y]),
/// and eta ^ (d eta)^n != 0 (d eta nondegenerate on ker eta).
template <Field S>
VerificationReport validate_structure(const ContactMetricAlgebra<S>& cm);

/// 2-form d eta on the basis.
template <Field S>
Matrix<S> d_eta(const LieAlgebra<S>& alg, const Vector<S>& eta);

/// (L_xi phi) x = [xi, phi x] - phi [xi, x]
template <Field S>
Matrix<S> lie_derivative_phi(const ContactMetricAlgebra<S>& cm);

/// h = 1/2 L_xi phi
template <Field S>
Matrix<S> h_tensor(const ContactMetricAlgebra<S>& cm);

template <Field S>
struct KappaMuFit {
    S kappa{};
    /// Absent when h = 0, where mu does not enter the curvature identity.
    std::optional<S> mu;
    /// Max-norm residual of R(x,y)xi - kappa(eta(y)x - eta(x)y) - mu(eta(y)hx - eta(x)hy) over basis pairs.
    S residual{};
    /// Residual is zero (exact) or at most `tol` relative to the curvature scale.
    bool is_kappa_mu = false;
    VerificationReport report;
};

/// Least-squares fit of R(x,y)xi = kappa(eta(y)x - eta(x)y) + mu(eta(y)hx - eta(x)hy)
/// over all basis pairs.
template <Field S>
KappaMuFit<S> kappa_mu_fit(const ContactMetricAlgebra<S>& cm, double tol = 1e-9);

/// D-homothetic deformation: eta' = a eta, xi' = xi / a, phi' = phi,
/// g' = a g + a(a - 1) eta (x) eta. Throws std::invalid_argument unless a > 0.
template <Field S>
ContactMetricAlgebra<S> d_homothetic(const ContactMetricAlgebra<S>& cm, const S& a);

/// (kappa, mu) after a D-homothetic deformation with constant a.
template <Field S>
std::pair<S, S> d_homothetic_kappa_mu(const S& kappa, const S& mu, const S& a) {
    return {(kappa + a * a - S(1)) / (a * a), (mu + S(2) * a - S(2)) / a};
}

/// Almost Hermitian algebra (J orthogonal, J^2 = -I not enforced here).
template <Field S>
struct HermitianAlgebra {
    MetricLieAlgebra<S> metric;
    Matrix<S> J;
};

/// J^2 = -I, J orthogonal, D J = 0 (Kähler) for the Levi-Civita connection.
template <Field S>
VerificationReport validate_kahler(const HermitianAlgebra<S>& h);

/// Structure induced on the hypersurface subalgebra spanned by `basis`
/// with unit normal `normal`: xi = -J normal, eta = g(xi, .),
/// phi x = J x - eta(x) normal. Throws std::invalid_argument if the span is
/// not a subalgebra, the normal is not unit and orthogonal to it, or phi
/// does not preserve the hypersurface.
template <Field S>
ContactMetricAlgebra<S> induced_hypersurface_structure(const HermitianAlgebra<S>& ambient,
                                                       const std::vector<Vector<S>>& basis,
                                                       std::vector<std::string> labels, const Vector<S>& normal,
                                                       std::string name);

/// Checks that `map` (column c = image of source basis vector c) is an
/// isomorphism of contact metric Lie algebras: invertible, bracket preserving,
/// isometric, and intertwining xi, eta, phi. The first failing entry is
/// reported as witness.
template <Field S>
VerificationReport check_structure_isomorphism(const ContactMetricAlgebra<S>& src, const ContactMetricAlgebra<S>& dst,
                                               const Matrix<S>& map);

template <Field To, Field From>
ContactMetricAlgebra<To> convert_contact(const ContactMetricAlgebra<From>& cm) {
    return {convert_metric<To>(cm.metric),
            {convert_vector<To>(cm.structure.xi), convert_vector<To>(cm.structure.eta),
             convert_matrix<To>(cm.structure.phi)}};
}

}  // namespace kmu
