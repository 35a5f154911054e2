#include "kmu/metric.hpp"

#include <stdexcept>

#include "kmu/linalg.hpp"

namespace kmu {

template <Field S>
MetricLieAlgebra<S>::MetricLieAlgebra(LieAlgebra<S> alg)
    : alg_(std::move(alg)),
      gram_(Matrix<S>::identity(alg_.dim())),
      gram_inv_(Matrix<S>::identity(alg_.dim())),
      orthonormal_(true) {}

template <Field S>
MetricLieAlgebra<S>::MetricLieAlgebra(LieAlgebra<S> alg, Matrix<S> gram) : alg_(std::move(alg)), gram_(std::move(gram)) {
    if (gram_.rows() != alg_.dim() || gram_.cols() != alg_.dim())
        throw std::invalid_argument("Gram matrix shape does not match algebra dimension");
    if (!is_symmetric(gram_)) throw std::invalid_argument("Gram matrix is not symmetric");
    if (!is_positive_definite(gram_)) throw std::invalid_argument("Gram matrix is not positive definite");
    gram_inv_ = inverse(gram_);
    orthonormal_ = (gram_ - Matrix<S>::identity(alg_.dim())).is_zero(0.0);
}

template <Field S>
S MetricLieAlgebra<S>::inner(const Vector<S>& x, const Vector<S>& y) const {
    if (orthonormal_) return dot(x, y);
    return dot(x, gram_ * y);
}

template <Field S>
Matrix<S> MetricLieAlgebra<S>::adjoint(const Matrix<S>& a) const {
    if (orthonormal_) return a.transpose();
    return gram_inv_ * (a.transpose() * gram_);
}

template <Field S>
std::vector<Vector<S>> orthogonal_complement(const MetricLieAlgebra<S>& m, const Subspace<S>& sub) {
    const std::size_t n = m.dim();
    if (sub.dim() == 0) return Subspace<S>::whole(n).basis();
    Matrix<S> rows(sub.dim(), n);
    for (std::size_t r = 0; r < sub.dim(); ++r) {
        const auto w = m.lower(sub.basis()[r]);
        for (std::size_t c = 0; c < n; ++c) rows(r, c) = w[c];
    }
    return Subspace<S>(n, nullspace(rows)).basis();
}

template <Field S>
std::optional<Vector<S>> coordinates_in(const std::vector<Vector<S>>& basis, const Vector<S>& v) {
    if (basis.empty()) {
        if (is_zero_vector(v)) return Vector<S>{};
        return std::nullopt;
    }
    return solve(Matrix<S>::from_columns(basis, v.size()), v);
}

template <Field S>
MetricLieAlgebra<S> restrict_to_basis(const MetricLieAlgebra<S>& m, const std::vector<Vector<S>>& basis,
                                      std::vector<std::string> labels, std::string name) {
    const std::size_t n = m.dim();
    const std::size_t k = basis.size();
    if (k == 0) throw std::invalid_argument("restrict_to_basis: empty basis");
    if (labels.size() != k) throw std::invalid_argument("restrict_to_basis: label count mismatch");
    const Matrix<S> b = Matrix<S>::from_columns(basis, n);
    if (rank(b) != k) throw std::invalid_argument("restrict_to_basis: basis vectors are dependent");

    // Left inverse (B^T B)^{-1} B^T; membership is re-checked exactly below.
    const Matrix<S> bt = b.transpose();
    const Matrix<S> left = inverse(bt * b) * bt;

    std::vector<BracketEntry<S>> entries;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const auto w = m.algebra().bracket(basis[i], basis[j]);
            const auto coords = left * w;
            const auto back = b * coords;
            if (!is_zero_vector(back - w))
                throw std::invalid_argument("restrict_to_basis: [" + labels[i] + ", " + labels[j] +
                                            "] leaves the span; not a subalgebra");
            BracketEntry<S> e{i, j, {}};
            for (std::size_t c = 0; c < k; ++c)
                if (!is_zero(coords[c], 0.0)) e.terms.push_back({c, coords[c]});
            if (!e.terms.empty()) entries.push_back(std::move(e));
        }
    Matrix<S> gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = m.inner(basis[i], basis[j]);
    return MetricLieAlgebra<S>(LieAlgebra<S>(std::move(name), std::move(labels), entries), std::move(gram));
}

template <Field S>
std::string combination_label(const std::vector<std::string>& labels, const Vector<S>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i], 0.0)) continue;
        const bool negative = v[i] < S(0);
        const S mag = negative ? S(-v[i]) : v[i];
        std::string coeff = (mag == S(1)) ? std::string() : scalar_string(mag) + "*";
        if (out.empty())
            out = (negative ? "-" : "") + coeff + labels[i];
        else
            out += (negative ? "-" : "+") + coeff + labels[i];
    }
    return out.empty() ? "0" : out;
}

#define KMU_INSTANTIATE_METRIC(S)                                                                           \
    template class MetricLieAlgebra<S>;                                                                    \
    template std::vector<Vector<S>> orthogonal_complement(const MetricLieAlgebra<S>&, const Subspace<S>&); \
    template std::optional<Vector<S>> coordinates_in(const std::vector<Vector<S>>&, const Vector<S>&);     \
    template MetricLieAlgebra<S> restrict_to_basis(const MetricLieAlgebra<S>&, const std::vector<Vector<S>>&, \
                                                   std::vector<std::string>, std::string);                 \
    template std::string combination_label(const std::vector<std::string>&, const Vector<S>&);

KMU_INSTANTIATE_METRIC(QSqrt2)
KMU_INSTANTIATE_METRIC(double)

}  // namespace kmu
