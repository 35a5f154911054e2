#include "kmu/soliton.hpp"

#include <stdexcept>

#include "kmu/algebra.hpp"
#include "kmu/linalg.hpp"
#include "kmu/riemannian.hpp"

namespace kmu {

namespace {

constexpr double kSolitonTol = 1e-8;
constexpr double kEinsteinTol = 1e-9;

template <Field S>
S max_entry(const Matrix<S>& a) {
    S worst(0);
    for (const auto& x : a.data())
        if (worst < abs_value(x)) worst = abs_value(x);
    return worst;
}

// L(M)(e_i, e_j) = M[e_i, e_j] - [M e_i, e_j] - [e_i, M e_j], stacked over i < j.
template <Field S>
Vector<S> leibniz_stack(const LieAlgebra<S>& alg, const Matrix<S>& mat) {
    const std::size_t n = alg.dim();
    Vector<S> out;
    out.reserve(n * n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto v = mat * alg.structure(i, j) - alg.bracket(mat.column(i), unit_vector<S>(n, j)) -
                           alg.bracket(unit_vector<S>(n, i), mat.column(j));
            out.insert(out.end(), v.begin(), v.end());
        }
    return out;
}

// ad_x restricted to the ideal spanned by `basis`, in that basis.
template <Field S>
Matrix<S> restricted_ad(const LieAlgebra<S>& alg, const Vector<S>& x, const std::vector<Vector<S>>& basis) {
    Matrix<S> out(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto coords = coordinates_in(basis, alg.bracket(x, basis[c]));
        if (!coords) throw std::logic_error("restricted_ad: span is not ad-invariant");
        out.set_column(c, *coords);
    }
    return out;
}

}  // namespace

std::string_view to_string(SolitonStatus s) {
    switch (s) {
        case SolitonStatus::einstein: return "einstein";
        case SolitonStatus::nontrivial_solvsoliton: return "nontrivial_solvsoliton";
        case SolitonStatus::none_found: return "none_found";
    }
    return "none_found";
}

std::string_view to_string(SolitonLabel l) {
    switch (l) {
        case SolitonLabel::expanding: return "expanding";
        case SolitonLabel::steady: return "steady";
        case SolitonLabel::shrinking: return "shrinking";
        case SolitonLabel::none: return "none";
    }
    return "none";
}

template <Field S>
EinsteinResult<S> einstein_check(const MetricLieAlgebra<S>& m) {
    const CurvaturePackage<S> pkg(m);
    const std::size_t n = m.dim();
    EinsteinResult<S> out;
    out.lambda = pkg.scalar_curvature() / S(static_cast<long>(n));
    const Matrix<S> d = pkg.ricci() - Matrix<S>::identity(n) * out.lambda;
    out.residual = max_entry(d);
    out.einstein = is_zero(out.residual, kEinsteinTol * std::max(1.0, pkg.ricci().max_abs()));
    out.report.subject = m.name();
    auto& rec = out.report.add("einstein", out.einstein);
    rec.scalars.push_back(report_scalar("lambda", out.lambda));
    rec.scalars.push_back(report_scalar("residual", out.residual));
    if (!out.einstein) {
        for (std::size_t r = 0; r < n && rec.witness.empty(); ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!is_zero(d(r, c), kEinsteinTol)) {
                    rec.witness = "Ric(" + m.algebra().labels()[c] + ")";
                    break;
                }
    }
    return out;
}

template <Field S>
SolitonVerdict<S> algebraic_soliton_solve(const MetricLieAlgebra<S>& m, std::optional<S> fixed_c) {
    const auto& alg = m.algebra();
    const std::size_t n = m.dim();
    const CurvaturePackage<S> pkg(m);
    const Matrix<S>& ric = pkg.ricci();
    const Matrix<S> id = Matrix<S>::identity(n);

    SolitonVerdict<S> out;
    if (fixed_c) {
        out.c = *fixed_c;
    } else {
        // L(Ric - c I) = L(Ric) + c L_0 with L_0 the stacked brackets.
        const Vector<S> rhs = -leibniz_stack(alg, ric);
        Matrix<S> col(rhs.size(), 1);
        std::size_t row = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) col(row++, 0) = alg.structure(i, j)[k];
        if (col.is_zero(0.0)) {
            out.c = S(0);
        } else {
            out.c = least_squares(col, rhs).x[0];
        }
    }
    out.derivation = ric - id * out.c;
    out.derivation_residual = leibniz_defect(alg, out.derivation);

    // Independent route: least-squares position of D in the derivation basis.
    const auto der = derivation_space(alg);
    if (der.empty()) {
        out.decomposition_residual = max_entry(out.derivation);
    } else {
        Matrix<S> basis(n * n, der.size());
        for (std::size_t b = 0; b < der.size(); ++b)
            for (std::size_t u = 0; u < n * n; ++u) basis(u, b) = der[b].data()[u];
        out.decomposition_residual = least_squares(basis, out.derivation.data()).residual;
    }

    const double tol = kSolitonTol * std::max(1.0, ric.max_abs());
    const bool found = is_zero(out.derivation_residual, tol) && is_zero(out.decomposition_residual, tol);
    if (!found)
        out.status = SolitonStatus::none_found;
    else if (out.derivation.is_zero(tol))
        out.status = SolitonStatus::einstein;
    else
        out.status = SolitonStatus::nontrivial_solvsoliton;
    if (out.nontrivial()) {
        switch (sign_of(out.c, tol)) {
            case -1: out.label = SolitonLabel::expanding; break;
            case 0: out.label = SolitonLabel::steady; break;
            default: out.label = SolitonLabel::shrinking; break;
        }
    }

    out.report.subject = m.name();
    auto& rec = out.report.add("algebraic_soliton", out.is_soliton(), std::string(to_string(out.status)),
                               fixed_c ? "constant fixed by caller" : "constant solved by least squares");
    rec.scalars.push_back(report_scalar("soliton_constant", out.c));
    rec.scalars.push_back(report_scalar("derivation_residual", out.derivation_residual));
    rec.scalars.push_back(report_scalar("decomposition_residual", out.decomposition_residual));
    rec.scalars.push_back(ReportScalar{"dim_der", static_cast<double>(der.size()), std::to_string(der.size())});
    auto& lab = out.report.add("type_label", out.nontrivial() ? Status::pass : Status::not_applicable,
                               std::string(to_string(out.label)));
    if (out.nontrivial() && out.label == SolitonLabel::expanding)
        lab.note = "nongradient expanding Ricci soliton on the simply connected group (algebraic premise verified)";
    return out;
}

template <Field S>
LauretReport<S> lauret_conditions(const MetricLieAlgebra<S>& m, std::optional<S> c) {
    const auto& alg = m.algebra();
    LauretReport<S> out;
    out.report.subject = m.name();
    if (!series_analysis(alg).solvable) throw std::invalid_argument("lauret_conditions: algebra is not solvable");
    out.c = c ? *c : algebraic_soliton_solve(m).c;
    if (sign_of(out.c, kSolitonTol) >= 0) throw std::invalid_argument("lauret_conditions: needs c < 0");

    const Subspace<S> nil = nilradical(alg);
    out.nilradical_dim = nil.dim();
    const auto& nbasis = nil.basis();
    const auto abasis = orthogonal_complement(m, nil);

    // (1)
    {
        std::vector<std::string> labels;
        for (const auto& v : nbasis) labels.push_back(combination_label(alg.labels(), v));
        const auto nsub = restrict_to_basis(m, nbasis, labels, m.name() + "-nilradical");
        const auto sol = algebraic_soliton_solve(nsub, std::optional<S>(out.c));
        auto& rec = out.report.add("nilsoliton", sol.is_soliton());
        rec.scalars.push_back(report_scalar("c", out.c));
        rec.scalars.push_back(report_scalar("derivation_residual", sol.derivation_residual));
        rec.scalars.push_back(ReportScalar{"dim_n", static_cast<double>(nil.dim()), std::to_string(nil.dim())});
    }

    // (2)
    {
        std::string witness;
        for (std::size_t i = 0; i < abasis.size() && witness.empty(); ++i)
            for (std::size_t j = i + 1; j < abasis.size(); ++j)
                if (!is_zero_vector(alg.bracket(abasis[i], abasis[j]))) {
                    witness = "[" + combination_label(alg.labels(), abasis[i]) + "," +
                              combination_label(alg.labels(), abasis[j]) + "]";
                    break;
                }
        out.report.add("a_abelian", witness.empty(), witness);
    }

    // Test vectors: basis and pairwise sums.
    std::vector<Vector<S>> tests = abasis;
    for (std::size_t i = 0; i < abasis.size(); ++i)
        for (std::size_t j = i + 1; j < abasis.size(); ++j) tests.push_back(abasis[i] + abasis[j]);

    Matrix<S> ngram(nbasis.size(), nbasis.size());
    for (std::size_t r = 0; r < nbasis.size(); ++r)
        for (std::size_t s = 0; s < nbasis.size(); ++s) ngram(r, s) = m.inner(nbasis[r], nbasis[s]);
    const Matrix<S> ngram_inv = nbasis.empty() ? ngram : inverse(ngram);
    auto adjoint = [&](const Matrix<S>& a) { return ngram_inv * (a.transpose() * ngram); };

    // (3)
    {
        std::string witness;
        S worst(0);
        for (const auto& a : tests) {
            const Matrix<S> ad = restricted_ad(alg, a, nbasis);
            const Matrix<S> at = adjoint(ad);
            const Matrix<S> comm = ad * at - at * ad;
            const S w = max_entry(comm);
            if (worst < w) worst = w;
            if (witness.empty() && !comm.is_zero()) witness = combination_label(alg.labels(), a);
        }
        auto& rec = out.report.add("ad_a_normal", witness.empty(), witness);
        rec.scalars.push_back(report_scalar("max_residual", worst));
    }

    // (4)
    {
        std::string witness;
        S worst(0);
        for (const auto& a : tests) {
            const Matrix<S> ad = restricted_ad(alg, a, nbasis);
            const Matrix<S> sym = (ad + adjoint(ad)) * from_rational<S>(1, 2);
            const S tr = Matrix<S>(sym * sym).trace();
            const S lhs = m.inner(a, a);
            const S d = lhs + tr / out.c;
            if (worst < abs_value(d)) worst = abs_value(d);
            if (witness.empty() && !is_zero(d, kSolitonTol * std::max(1.0, to_double(abs_value(lhs)))))
                witness = combination_label(alg.labels(), a);
        }
        auto& rec = out.report.add("a_metric", witness.empty(), witness);
        rec.scalars.push_back(report_scalar("max_residual", worst));
    }
    return out;
}

template <Field S>
RankReduction<S> rank_reduction(const MetricLieAlgebra<S>& m, const std::vector<Vector<S>>& a_prime) {
    const auto& alg = m.algebra();
    const std::size_t n = m.dim();
    const Subspace<S> nil = nilradical(alg);
    const Subspace<S> a_space(n, orthogonal_complement(m, nil));
    for (const auto& v : a_prime) {
        if (v.size() != n) throw std::invalid_argument("rank_reduction: vector length mismatch");
        if (!a_space.contains(v))
            throw std::invalid_argument("rank_reduction: " + combination_label(alg.labels(), v) +
                                        " is not orthogonal to the nilradical");
    }
    const Subspace<S> ap(n, a_prime);
    if (ap.dim() == 0) throw std::invalid_argument("rank_reduction: a' must be nonzero");

    RankReduction<S> out;
    std::vector<std::string> labels;
    for (const auto& v : ap.basis()) {
        out.sub_basis.push_back(v);
        labels.push_back(combination_label(alg.labels(), v));
    }
    for (const auto& v : nil.basis()) {
        out.sub_basis.push_back(v);
        labels.push_back(combination_label(alg.labels(), v));
    }
    out.sub = restrict_to_basis(m, out.sub_basis, labels, m.name() + "-reduced");
    out.einstein = einstein_check(out.sub);
    out.soliton = algebraic_soliton_solve(out.sub);
    out.mean_curvature = mean_curvature_vector(m);

    const auto ambient = einstein_check(m);
    if (!ambient.einstein) {
        out.note = "ambient metric is not Einstein";
    } else if (!is_iwasawa_type(m).iwasawa) {
        out.note = "ambient algebra is not of Iwasawa type";
    } else {
        out.heber = ap.contains(out.mean_curvature);
    }
    return out;
}

#define KMU_INSTANTIATE_SOLITON(S)                                                                 \
    template EinsteinResult<S> einstein_check(const MetricLieAlgebra<S>&);                        \
    template SolitonVerdict<S> algebraic_soliton_solve(const MetricLieAlgebra<S>&, std::optional<S>); \
    template LauretReport<S> lauret_conditions(const MetricLieAlgebra<S>&, std::optional<S>);     \
    template RankReduction<S> rank_reduction(const MetricLieAlgebra<S>&, const std::vector<Vector<S>>&);

KMU_INSTANTIATE_SOLITON(QSqrt2)
KMU_INSTANTIATE_SOLITON(double)

}  // namespace kmu
