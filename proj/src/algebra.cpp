#include "kmu/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "kmu/linalg.hpp"

namespace kmu {

namespace {

std::string triple(const std::vector<std::string>& labels, std::size_t i, std::size_t j, std::size_t k) {
    return "(" + labels[i] + "," + labels[j] + "," + labels[k] + ")";
}

}  // namespace

template <Field S>
VerificationReport validate_jacobi(const LieAlgebra<S>& alg) {
    VerificationReport rep;
    rep.subject = alg.name();
    const std::size_t n = alg.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto ei = unit_vector<S>(n, i);
                const auto ej = unit_vector<S>(n, j);
                const auto ek = unit_vector<S>(n, k);
                const Vector<S> sum = alg.bracket(alg.structure(i, j), ek) + alg.bracket(alg.structure(j, k), ei) +
                                      alg.bracket(alg.structure(k, i), ej);
                const double mag = max_abs(sum);
                worst = std::max(worst, mag);
                if (!is_zero_vector(sum)) {
                    auto& rec = rep.add("jacobi", Status::fail, triple(alg.labels(), i, j, k),
                                        "[[" + alg.labels()[i] + "," + alg.labels()[j] + "]," + alg.labels()[k] +
                                            "] + cyclic != 0");
                    for (std::size_t c = 0; c < n; ++c)
                        if (!is_zero(sum[c], 0.0)) rec.scalars.push_back(report_scalar("residual." + alg.labels()[c], sum[c]));
                    return rep;
                }
            }
    auto& rec = rep.add("jacobi", Status::pass);
    rec.scalars.push_back(ReportScalar{"max_residual", worst, std::nullopt});
    return rep;
}

template <Field S>
Subspace<S> bracket_span(const LieAlgebra<S>& alg, const Subspace<S>& a, const Subspace<S>& b) {
    std::vector<Vector<S>> out;
    for (const auto& u : a.basis())
        for (const auto& v : b.basis()) {
            auto w = alg.bracket(u, v);
            if (!is_zero_vector(w, 0.0)) out.push_back(std::move(w));
        }
    return Subspace<S>(alg.dim(), out);
}

template <Field S>
Subspace<S> derived_algebra(const LieAlgebra<S>& alg) {
    const auto g = Subspace<S>::whole(alg.dim());
    return bracket_span(alg, g, g);
}

template <Field S>
bool is_subalgebra(const LieAlgebra<S>& alg, const Subspace<S>& sub) {
    return sub.contains(bracket_span(alg, sub, sub));
}

template <Field S>
bool is_ideal(const LieAlgebra<S>& alg, const Subspace<S>& sub) {
    return sub.contains(bracket_span(alg, Subspace<S>::whole(alg.dim()), sub));
}

std::size_t SeriesReport::derived_length() const {
    return solvable ? derived_dims.size() - 1 : 0;
}

std::size_t SeriesReport::nilpotency_step() const {
    return nilpotent ? lower_central_dims.size() - 1 : 0;
}

template <Field S>
SeriesReport series_analysis(const LieAlgebra<S>& alg, const Subspace<S>& sub) {
    SeriesReport rep;
    Subspace<S> cur = sub;
    rep.derived_dims.push_back(cur.dim());
    while (cur.dim() > 0) {
        auto next = bracket_span(alg, cur, cur);
        if (next.dim() == cur.dim()) break;
        cur = std::move(next);
        rep.derived_dims.push_back(cur.dim());
    }
    rep.solvable = cur.dim() == 0;

    cur = sub;
    rep.lower_central_dims.push_back(cur.dim());
    while (cur.dim() > 0) {
        auto next = bracket_span(alg, sub, cur);
        if (next.dim() == cur.dim()) break;
        cur = std::move(next);
        rep.lower_central_dims.push_back(cur.dim());
    }
    rep.nilpotent = cur.dim() == 0;
    return rep;
}

template <Field S>
SeriesReport series_analysis(const LieAlgebra<S>& alg) {
    return series_analysis(alg, Subspace<S>::whole(alg.dim()));
}

template <Field S>
Subspace<S> nilradical(const LieAlgebra<S>& alg) {
    const std::size_t n = alg.dim();
    if (!series_analysis(alg).solvable) throw std::invalid_argument("nilradical: algebra is not solvable");

    const Subspace<S> derived = derived_algebra(alg);
    auto nilpotent_ideal = [&](const Subspace<S>& s) {
        return is_ideal(alg, s) && series_analysis(alg, s).nilpotent;
    };

    Subspace<S> nil = derived;
    for (std::size_t i = 0; i < n; ++i) {
        const auto ei = unit_vector<S>(n, i);
        if (nil.contains(ei)) continue;
        if (!is_nilpotent_matrix(alg.ad(ei))) continue;
        auto candidate = nil.sum(Subspace<S>(n, {ei}));
        if (nilpotent_ideal(candidate)) nil = std::move(candidate);
    }

    // A posteriori certificate.
    if (!is_ideal(alg, nil)) throw std::logic_error("nilradical: result is not an ideal");
    if (!series_analysis(alg, nil).nilpotent) throw std::logic_error("nilradical: result is not nilpotent");
    if (!nil.contains(derived)) throw std::logic_error("nilradical: result misses [g, g]");
    for (std::size_t i = 0; i < n; ++i) {
        const auto ei = unit_vector<S>(n, i);
        if (nil.contains(ei)) continue;
        if (nilpotent_ideal(nil.sum(Subspace<S>(n, {ei}))))
            throw std::logic_error("nilradical: result extends by " + alg.labels()[i]);
    }
    return nil;
}

template <Field S>
std::vector<Matrix<S>> derivation_space(const LieAlgebra<S>& alg) {
    const std::size_t n = alg.dim();
    // Unknown D(r, c) sits at index r * n + c.
    std::vector<Vector<S>> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& cij = alg.structure(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vector<S> row(n * n, S(0));
                // D[e_i, e_j] component k
                for (std::size_t l = 0; l < n; ++l)
                    if (!is_zero(cij[l], 0.0)) row[k * n + l] += cij[l];
                // -[D e_i, e_j] - [e_i, D e_j] component k
                for (std::size_t l = 0; l < n; ++l) {
                    const S& clj = alg.structure(l, j)[k];
                    if (!is_zero(clj, 0.0)) row[l * n + i] -= clj;
                    const S& cil = alg.structure(i, l)[k];
                    if (!is_zero(cil, 0.0)) row[l * n + j] -= cil;
                }
                if (!is_zero_vector(row, 0.0)) rows.push_back(std::move(row));
            }
        }

    std::vector<Vector<S>> kernel;
    if (rows.empty()) {
        for (std::size_t u = 0; u < n * n; ++u) kernel.push_back(unit_vector<S>(n * n, u));
    } else {
        Matrix<S> system(rows.size(), n * n);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < n * n; ++c) system(r, c) = rows[r][c];
        kernel = nullspace(system);
    }

    std::vector<Matrix<S>> out;
    for (const auto& v : kernel) {
        Matrix<S> d(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) d(r, c) = v[r * n + c];
        out.push_back(std::move(d));
    }
    return out;
}

template <Field S>
S leibniz_defect(const LieAlgebra<S>& alg, const Matrix<S>& d) {
    const std::size_t n = alg.dim();
    S worst(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto lhs = d * alg.structure(i, j);
            const auto rhs = alg.bracket(d.column(i), unit_vector<S>(n, j)) + alg.bracket(unit_vector<S>(n, i), d.column(j));
            for (const auto& x : lhs - rhs) {
                const S mag = abs_value(x);
                if (worst < mag) worst = mag;
            }
        }
    return worst;
}

template <Field S>
Matrix<S> killing_form(const LieAlgebra<S>& alg) {
    const std::size_t n = alg.dim();
    std::vector<Matrix<S>> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(alg.ad_basis(i));
    Matrix<S> b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            S t(0);
            // tr(ad_i ad_j) = sum_{r,c} ad_i(r,c) ad_j(c,r)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    const S& x = ads[i](r, c);
                    if (is_zero(x, 0.0)) continue;
                    t += x * ads[j](c, r);
                }
            b(i, j) = t;
            b(j, i) = t;
        }
    return b;
}

template <Field S>
std::optional<Vector<S>> span_coordinates(const std::vector<Matrix<S>>& basis, const Matrix<S>& m) {
    if (basis.empty()) {
        if (m.is_zero()) return Vector<S>{};
        return std::nullopt;
    }
    const std::size_t len = m.rows() * m.cols();
    Matrix<S> a(len, basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t u = 0; u < len; ++u) a(u, b) = basis[b].data()[u];
    return solve(a, m.data());
}

#define KMU_INSTANTIATE_ALGEBRA(S)                                                                     \
    template VerificationReport validate_jacobi(const LieAlgebra<S>&);                                \
    template Subspace<S> bracket_span(const LieAlgebra<S>&, const Subspace<S>&, const Subspace<S>&);  \
    template Subspace<S> derived_algebra(const LieAlgebra<S>&);                                       \
    template bool is_subalgebra(const LieAlgebra<S>&, const Subspace<S>&);                            \
    template bool is_ideal(const LieAlgebra<S>&, const Subspace<S>&);                                 \
    template SeriesReport series_analysis(const LieAlgebra<S>&);                                      \
    template SeriesReport series_analysis(const LieAlgebra<S>&, const Subspace<S>&);                  \
    template Subspace<S> nilradical(const LieAlgebra<S>&);                                            \
    template std::vector<Matrix<S>> derivation_space(const LieAlgebra<S>&);                           \
    template S leibniz_defect(const LieAlgebra<S>&, const Matrix<S>&);                                \
    template Matrix<S> killing_form(const LieAlgebra<S>&);                                            \
    template std::optional<Vector<S>> span_coordinates(const std::vector<Matrix<S>>&, const Matrix<S>&);

KMU_INSTANTIATE_ALGEBRA(QSqrt2)
KMU_INSTANTIATE_ALGEBRA(double)

}  // namespace kmu
