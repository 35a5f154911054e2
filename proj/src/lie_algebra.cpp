#include "kmu/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmu/linalg.hpp"

namespace kmu {

template <Field S>
LieAlgebra<S>::LieAlgebra(std::string name, std::vector<std::string> labels,
                          const std::vector<BracketEntry<S>>& entries)
    : name_(std::move(name)), labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw std::invalid_argument("Lie algebra must have positive dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (labels_[i] == labels_[j]) throw std::invalid_argument("duplicate basis label '" + labels_[i] + "'");
    table_.assign(n * n, Vector<S>(n, S(0)));
    for (const auto& e : entries) {
        if (e.i >= n || e.j >= n)
            throw std::invalid_argument("bracket index out of range (" + std::to_string(e.i) + ", " +
                                        std::to_string(e.j) + ") for dim " + std::to_string(n));
        if (e.i == e.j) {
            for (const auto& t : e.terms)
                if (!is_zero(t.value, 0.0))
                    throw std::invalid_argument("nonzero self-bracket [e" + std::to_string(e.i) + ", e" +
                                                std::to_string(e.i) + "]");
            continue;
        }
        const std::size_t lo = std::min(e.i, e.j);
        const std::size_t hi = std::max(e.i, e.j);
        const bool flip = e.i > e.j;
        for (const auto& t : e.terms) {
            if (t.k >= n) throw std::invalid_argument("bracket coefficient index out of range");
            table_[lo * n + hi][t.k] += flip ? S(-t.value) : t.value;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) table_[j * n + i] = -table_[i * n + j];
}

template <Field S>
LieAlgebra<S> LieAlgebra<S>::abelian(std::size_t dim) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
    return LieAlgebra("abelian-" + std::to_string(dim), std::move(labels), {});
}

template <Field S>
std::optional<std::size_t> LieAlgebra<S>::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

template <Field S>
std::vector<BracketEntry<S>> LieAlgebra<S>::entries() const {
    std::vector<BracketEntry<S>> out;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            BracketEntry<S> e{i, j, {}};
            const auto& v = structure(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(v[k], 0.0)) e.terms.push_back({k, v[k]});
            if (!e.terms.empty()) out.push_back(std::move(e));
        }
    return out;
}

template <Field S>
void LieAlgebra<S>::check_length(const Vector<S>& v) const {
    if (v.size() != dim())
        throw std::invalid_argument("vector of length " + std::to_string(v.size()) + " for algebra of dim " +
                                    std::to_string(dim()));
}

template <Field S>
Vector<S> LieAlgebra<S>::bracket(const Vector<S>& x, const Vector<S>& y) const {
    check_length(x);
    check_length(y);
    const std::size_t n = dim();
    Vector<S> out(n, S(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(x[i], 0.0)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || is_zero(y[j], 0.0)) continue;
            axpy(S(x[i] * y[j]), structure(i, j), out);
        }
    }
    return out;
}

template <Field S>
Matrix<S> LieAlgebra<S>::ad(const Vector<S>& x) const {
    check_length(x);
    const std::size_t n = dim();
    Matrix<S> m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, bracket(x, unit_vector<S>(n, j)));
    return m;
}

template <Field S>
Matrix<S> LieAlgebra<S>::ad_basis(std::size_t i) const {
    return ad(unit_vector<S>(dim(), i));
}

template <Field S>
LieAlgebra<S> LieAlgebra<S>::renamed(std::string name) const {
    LieAlgebra copy(*this);
    copy.name_ = std::move(name);
    return copy;
}

// ---- Subspace --------------------------------------------------------------

template <Field S>
Subspace<S>::Subspace(std::size_t parent_dim, const std::vector<Vector<S>>& spanning) : parent_dim_(parent_dim) {
    if (spanning.empty()) return;
    Matrix<S> m(spanning.size(), parent_dim);
    for (std::size_t r = 0; r < spanning.size(); ++r) {
        if (spanning[r].size() != parent_dim) throw std::invalid_argument("spanning vector length mismatch");
        for (std::size_t c = 0; c < parent_dim; ++c) m(r, c) = spanning[r][c];
    }
    auto e = rref(m);
    pivots_ = e.pivots;
    for (std::size_t r = 0; r < e.rank(); ++r) basis_.push_back(e.reduced.row(r));
}

template <Field S>
Subspace<S> Subspace<S>::whole(std::size_t n) {
    std::vector<Vector<S>> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector<S>(n, i));
    return Subspace(n, basis);
}

template <Field S>
Vector<S> Subspace<S>::reduce(const Vector<S>& v) const {
    if (v.size() != parent_dim_) throw std::invalid_argument("vector length mismatch");
    Vector<S> r = v;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const S f = r[pivots_[b]];
        if (is_zero(f, 0.0)) continue;
        axpy(S(-f), basis_[b], r);
        r[pivots_[b]] = S(0);
    }
    return r;
}

template <Field S>
bool Subspace<S>::contains(const Vector<S>& v) const {
    const auto r = reduce(v);
    if constexpr (is_exact_v<S>) {
        return is_zero_vector(r, 0.0);
    } else {
        return max_abs(r) <= 1e-9 * std::max(1.0, max_abs(v));
    }
}

template <Field S>
bool Subspace<S>::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector<S>& v) { return contains(v); });
}

template <Field S>
Subspace<S> Subspace<S>::sum(const Subspace& other) const {
    auto all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return Subspace(parent_dim_, all);
}

template class LieAlgebra<QSqrt2>;
template class LieAlgebra<double>;
template class Subspace<QSqrt2>;
template class Subspace<double>;

}  // namespace kmu
