#include "kmu/contact.hpp"

#include <stdexcept>

#include "kmu/linalg.hpp"
#include "kmu/riemannian.hpp"

namespace kmu {

namespace {

template <Field S>
S apply_covector(const Vector<S>& w, const Vector<S>& v) {
    return dot(w, v);
}

template <Field S>
std::string pair_label(const LieAlgebra<S>& alg, std::size_t i, std::size_t j) {
    return "(" + alg.labels()[i] + "," + alg.labels()[j] + ")";
}

// Max-norm of a matrix difference with the (row, col) of the first largest entry.
template <Field S>
std::pair<S, std::string> first_nonzero(const Matrix<S>& d, const std::vector<std::string>& labels, double tol) {
    S worst(0);
    std::string where;
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) {
            const S v = abs_value(d(r, c));
            if (where.empty() && !is_zero(d(r, c), tol)) where = labels[c] + "->" + labels[r];
            if (worst < v) worst = v;
        }
    return {worst, where};
}

}  // namespace

template <Field S>
Matrix<S> d_eta(const LieAlgebra<S>& alg, const Vector<S>& eta) {
    const std::size_t n = alg.dim();
    const S half = from_rational<S>(1, 2);
    Matrix<S> w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = -half * apply_covector(eta, alg.structure(i, j));
    return w;
}

template <Field S>
VerificationReport validate_structure(const ContactMetricAlgebra<S>& cm) {
    const auto& m = cm.metric;
    const auto& alg = m.algebra();
    const auto& st = cm.structure;
    const std::size_t n = m.dim();
    if (st.xi.size() != n || st.eta.size() != n || st.phi.rows() != n || st.phi.cols() != n)
        throw std::invalid_argument("contact structure dimensions do not match the algebra");
    const auto& labels = alg.labels();
    const Matrix<S> id = Matrix<S>::identity(n);

    VerificationReport rep;
    rep.subject = cm.name();

    {
        const S v = apply_covector(st.eta, st.xi);
        auto& rec = rep.add("eta_xi", is_zero(S(v - S(1))));
        rec.scalars.push_back(report_scalar("eta(xi)", v));
    }
    {
        const auto px = st.phi * st.xi;
        rep.add("phi_xi", is_zero_vector(px), is_zero_vector(px) ? "" : "phi(xi)");
    }
    {
        std::string witness;
        for (std::size_t c = 0; c < n && witness.empty(); ++c)
            if (!is_zero(apply_covector(st.eta, st.phi.column(c)))) witness = "eta(phi " + labels[c] + ")";
        rep.add("eta_phi", witness.empty(), witness);
    }
    {
        const Matrix<S> d = st.phi * st.phi + id - outer(st.xi, st.eta);
        const auto [worst, where] = first_nonzero(d, labels, kStructuralTol);
        auto& rec = rep.add("phi_squared", where.empty(), where);
        rec.scalars.push_back(report_scalar("max_residual", worst));
    }
    {
        // g(phi x, phi y) - g(x, y) + eta(x) eta(y)
        const Matrix<S> d = st.phi.transpose() * m.gram() * st.phi - m.gram() + outer(st.eta, st.eta);
        const auto [worst, where] = first_nonzero(d, labels, kStructuralTol);
        auto& rec = rep.add("compatible_metric", where.empty(), where);
        rec.scalars.push_back(report_scalar("max_residual", worst));
    }
    {
        const auto d = st.eta - m.lower(st.xi);
        std::string witness;
        for (std::size_t c = 0; c < n && witness.empty(); ++c)
            if (!is_zero(d[c])) witness = labels[c];
        rep.add("eta_metric_dual", witness.empty(), witness);
    }
    const Matrix<S> w = d_eta(alg, st.eta);
    {
        // g(e_i, phi e_j) - d eta(e_i, e_j)
        const Matrix<S> d = m.gram() * st.phi - w;
        std::string witness;
        S worst(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (witness.empty() && !is_zero(d(i, j))) witness = pair_label(alg, i, j);
                if (worst < abs_value(d(i, j))) worst = abs_value(d(i, j));
            }
        auto& rec = rep.add("contact_condition", witness.empty(), witness);
        rec.scalars.push_back(report_scalar("max_residual", worst));
    }
    {
        // d eta restricted to ker eta, in a basis of ker eta.
        Matrix<S> row(1, n);
        for (std::size_t c = 0; c < n; ++c) row(0, c) = st.eta[c];
        const auto ker = nullspace(row);
        Matrix<S> restricted(ker.size(), ker.size());
        for (std::size_t a = 0; a < ker.size(); ++a)
            for (std::size_t b = 0; b < ker.size(); ++b) restricted(a, b) = dot(ker[a], w * ker[b]);
        const std::size_t r = ker.empty() ? 0 : rank(restricted);
        const bool ok = n % 2 == 1 && ker.size() + 1 == n && r == ker.size();
        auto& rec = rep.add("nondegenerate", ok, {}, "rank of d eta on ker eta");
        rec.scalars.push_back(ReportScalar{"rank", static_cast<double>(r), std::to_string(r)});
    }
    return rep;
}

template <Field S>
Matrix<S> lie_derivative_phi(const ContactMetricAlgebra<S>& cm) {
    const auto& alg = cm.algebra();
    const auto& st = cm.structure;
    const std::size_t n = cm.dim();
    Matrix<S> out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const auto e = unit_vector<S>(n, c);
        out.set_column(c, alg.bracket(st.xi, st.phi * e) - st.phi * alg.bracket(st.xi, e));
    }
    return out;
}

template <Field S>
Matrix<S> h_tensor(const ContactMetricAlgebra<S>& cm) {
    return lie_derivative_phi(cm) * from_rational<S>(1, 2);
}

template <Field S>
KappaMuFit<S> kappa_mu_fit(const ContactMetricAlgebra<S>& cm, double tol) {
    const std::size_t n = cm.dim();
    const auto& st = cm.structure;
    const CurvaturePackage<S> pkg(cm.metric);
    const Matrix<S> h = h_tensor(cm);
    const bool h_zero = h.is_zero();

    const std::size_t pairs = n * (n - 1) / 2;
    const std::size_t unknowns = h_zero ? 1 : 2;
    Matrix<S> a(pairs * n, unknowns);
    Vector<S> b(pairs * n, S(0));
    std::size_t block = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++block) {
            const auto ei = unit_vector<S>(n, i);
            const auto ej = unit_vector<S>(n, j);
            const auto lhs = pkg.curvature(ei, ej, st.xi);
            const auto v1 = st.eta[j] * ei - st.eta[i] * ej;
            const auto v2 = st.eta[j] * (h * ei) - st.eta[i] * (h * ej);
            for (std::size_t r = 0; r < n; ++r) {
                a(block * n + r, 0) = v1[r];
                if (!h_zero) a(block * n + r, 1) = v2[r];
                b[block * n + r] = lhs[r];
            }
        }

    const auto ls = least_squares(a, b);
    KappaMuFit<S> fit;
    fit.kappa = ls.x[0];
    if (!h_zero) fit.mu = ls.x[1];
    fit.residual = ls.residual;
    const double scale = std::max(1.0, max_abs(b));
    fit.is_kappa_mu = is_zero(fit.residual, tol * scale) && ls.rank == unknowns;

    fit.report.subject = cm.name();
    auto& rec = fit.report.add("kappa_mu_identity", fit.is_kappa_mu);
    rec.scalars.push_back(report_scalar("kappa", fit.kappa));
    if (fit.mu) rec.scalars.push_back(report_scalar("mu", *fit.mu));
    rec.scalars.push_back(report_scalar("residual", fit.residual));
    if (ls.rank < unknowns) rec.note = "fit is underdetermined";
    fit.report.add("mu_determined", fit.mu ? Status::pass : Status::indeterminate, {},
                   fit.mu ? "" : "h = 0, mu does not enter the identity");
    return fit;
}

template <Field S>
ContactMetricAlgebra<S> d_homothetic(const ContactMetricAlgebra<S>& cm, const S& a) {
    if (sign_of(a, 0.0) <= 0) throw std::invalid_argument("D-homothetic constant must be positive");
    const auto& st = cm.structure;
    Matrix<S> gram = cm.metric.gram() * a + outer(st.eta, st.eta) * S(a * (a - S(1)));
    AlmostContactStructure<S> out{(S(1) / a) * st.xi, a * st.eta, st.phi};
    return {MetricLieAlgebra<S>(cm.algebra(), std::move(gram)), std::move(out)};
}

template <Field S>
VerificationReport validate_kahler(const HermitianAlgebra<S>& h) {
    const auto& m = h.metric;
    const std::size_t n = m.dim();
    const auto& labels = m.algebra().labels();
    VerificationReport rep;
    rep.subject = m.name();
    if (h.J.rows() != n || h.J.cols() != n) throw std::invalid_argument("J dimensions do not match the algebra");
    {
        const auto [worst, where] = first_nonzero(Matrix<S>(h.J * h.J + Matrix<S>::identity(n)), labels, kStructuralTol);
        auto& rec = rep.add("J_squared", where.empty(), where);
        rec.scalars.push_back(report_scalar("max_residual", worst));
    }
    {
        const auto [worst, where] = first_nonzero(Matrix<S>(h.J.transpose() * m.gram() * h.J - m.gram()), labels, kStructuralTol);
        auto& rec = rep.add("J_orthogonal", where.empty(), where);
        rec.scalars.push_back(report_scalar("max_residual", worst));
    }
    {
        const CurvaturePackage<S> pkg(m);
        std::string witness;
        S worst(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto ej = unit_vector<S>(n, j);
                const auto ei = unit_vector<S>(n, i);
                const auto d = pkg.connection(ei, h.J * ej) - h.J * pkg.connection_basis(i, j);
                for (const auto& x : d)
                    if (worst < abs_value(x)) worst = abs_value(x);
                if (witness.empty() && !is_zero_vector(d)) witness = "D_" + labels[i] + " J " + labels[j];
            }
        auto& rec = rep.add("J_parallel", witness.empty(), witness);
        rec.scalars.push_back(report_scalar("max_residual", worst));
    }
    return rep;
}

template <Field S>
ContactMetricAlgebra<S> induced_hypersurface_structure(const HermitianAlgebra<S>& ambient,
                                                       const std::vector<Vector<S>>& basis,
                                                       std::vector<std::string> labels, const Vector<S>& normal,
                                                       std::string name) {
    const auto& m = ambient.metric;
    if (!is_zero(S(m.inner(normal, normal) - S(1)))) throw std::invalid_argument("hypersurface normal is not a unit vector");
    for (std::size_t r = 0; r < basis.size(); ++r)
        if (!is_zero(m.inner(normal, basis[r])))
            throw std::invalid_argument("hypersurface normal is not orthogonal to " + labels.at(r));
    if (basis.size() + 1 != m.dim()) throw std::invalid_argument("hypersurface basis must have codimension one");

    auto sub = restrict_to_basis(m, basis, std::move(labels), std::move(name));
    const std::size_t k = basis.size();

    const Vector<S> xi_amb = -(ambient.J * normal);
    auto in_sub = [&](const Vector<S>& v, const std::string& what) {
        auto c = coordinates_in(basis, v);
        if (!c) throw std::invalid_argument(what + " leaves the hypersurface");
        return *c;
    };
    AlmostContactStructure<S> st;
    st.xi = in_sub(xi_amb, "xi");
    st.eta = sub.lower(st.xi);
    st.phi = Matrix<S>(k, k);
    for (std::size_t c = 0; c < k; ++c) {
        const S eta_c = m.inner(xi_amb, basis[c]);
        Vector<S> img = ambient.J * basis[c];
        axpy(S(-eta_c), normal, img);
        st.phi.set_column(c, in_sub(img, "phi(" + sub.algebra().labels()[c] + ")"));
    }
    return {std::move(sub), std::move(st)};
}

template <Field S>
VerificationReport check_structure_isomorphism(const ContactMetricAlgebra<S>& src, const ContactMetricAlgebra<S>& dst,
                                               const Matrix<S>& map) {
    const std::size_t n = src.dim();
    VerificationReport rep;
    rep.subject = src.name() + " -> " + dst.name();
    if (dst.dim() != n || map.rows() != n || map.cols() != n) {
        rep.add("dimensions", false, {}, "map must be square of the common dimension");
        return rep;
    }
    const auto& sl = src.algebra().labels();
    const auto& dl = dst.algebra().labels();
    const auto& ss = src.structure;
    const auto& ds = dst.structure;

    rep.add("invertible", rank(map) == n);

    {
        std::string witness;
        S worst(0);
        for (std::size_t i = 0; i < n && witness.empty(); ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto lhs = map * src.algebra().structure(i, j);
                const auto rhs = dst.algebra().bracket(map.column(i), map.column(j));
                const auto d = lhs - rhs;
                for (const auto& x : d)
                    if (worst < abs_value(x)) worst = abs_value(x);
                if (!is_zero_vector(d)) {
                    witness = "[" + sl[i] + "," + sl[j] + "]";
                    break;
                }
            }
        auto& rec = rep.add("bracket_homomorphism", witness.empty(), witness);
        rec.scalars.push_back(report_scalar("max_residual", worst));
    }
    {
        const Matrix<S> d = map.transpose() * dst.metric.gram() * map - src.metric.gram();
        std::string witness;
        for (std::size_t r = 0; r < n && witness.empty(); ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!is_zero(d(r, c))) {
                    witness = "<" + sl[r] + "," + sl[c] + ">";
                    break;
                }
        rep.add("isometry", witness.empty(), witness);
    }
    {
        const auto d = map * ss.xi - ds.xi;
        std::string witness;
        for (std::size_t r = 0; r < n && witness.empty(); ++r)
            if (!is_zero(d[r])) witness = dl[r];
        rep.add("xi", witness.empty(), witness);
    }
    {
        std::string witness;
        for (std::size_t c = 0; c < n && witness.empty(); ++c)
            if (!is_zero(S(dot(ds.eta, map.column(c)) - ss.eta[c]))) witness = sl[c];
        rep.add("eta", witness.empty(), witness);
    }
    {
        const Matrix<S> d = map * ss.phi - ds.phi * map;
        std::string witness;
        for (std::size_t c = 0; c < n && witness.empty(); ++c)
            for (std::size_t r = 0; r < n; ++r)
                if (!is_zero(d(r, c))) {
                    witness = "phi(" + sl[c] + ")";
                    break;
                }
        rep.add("phi", witness.empty(), witness);
    }
    return rep;
}

#define KMU_INSTANTIATE_CONTACT(S)                                                                              \
    template Matrix<S> d_eta(const LieAlgebra<S>&, const Vector<S>&);                                          \
    template VerificationReport validate_structure(const ContactMetricAlgebra<S>&);                            \
    template Matrix<S> lie_derivative_phi(const ContactMetricAlgebra<S>&);                                     \
    template Matrix<S> h_tensor(const ContactMetricAlgebra<S>&);                                               \
    template KappaMuFit<S> kappa_mu_fit(const ContactMetricAlgebra<S>&, double);                               \
    template ContactMetricAlgebra<S> d_homothetic(const ContactMetricAlgebra<S>&, const S&);                   \
    template VerificationReport validate_kahler(const HermitianAlgebra<S>&);                                   \
    template ContactMetricAlgebra<S> induced_hypersurface_structure(                                           \
        const HermitianAlgebra<S>&, const std::vector<Vector<S>>&, std::vector<std::string>, const Vector<S>&, \
        std::string);                                                                                          \
    template VerificationReport check_structure_isomorphism(const ContactMetricAlgebra<S>&,                    \
                                                            const ContactMetricAlgebra<S>&, const Matrix<S>&);

KMU_INSTANTIATE_CONTACT(QSqrt2)
KMU_INSTANTIATE_CONTACT(double)

}  // namespace kmu
