#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kmu/matrix.hpp"

namespace kmu {

template <Field S>
struct Term {
    std::size_t k = 0;
    S value{};
};

/// One structure-constant row: [e_i, e_j] = sum_k value_k e_k.
template <Field S>
struct BracketEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<Term<S>> terms;
};

/// Finite-dimensional Lie algebra given by structure constants on a labelled basis.
///
/// Brackets are stored for i < j only; [e_j, e_i] is always derived as -[e_i, e_j],
/// so antisymmetry holds by construction. Entries supplied with i > j are negated
/// into canonical position, repeated entries accumulate. The Jacobi identity is
/// not enforced here; see validate_jacobi.
template <Field S>
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<std::string> labels, const std::vector<BracketEntry<S>>& entries);

    /// Abelian algebra with labels e1..en.
    static LieAlgebra abelian(std::size_t dim);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    /// [e_i, e_j] as a dense coordinate vector.
    const Vector<S>& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    /// Canonical nonzero entries, i < j, terms sorted by k.
    std::vector<BracketEntry<S>> entries() const;

    Vector<S> bracket(const Vector<S>& x, const Vector<S>& y) const;
    Matrix<S> ad(const Vector<S>& x) const;
    Matrix<S> ad_basis(std::size_t i) const;

    LieAlgebra renamed(std::string name) const;

private:
    void check_length(const Vector<S>& v) const;

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Vector<S>> table_;  // dim*dim dense table, antisymmetric
};

/// Linear subspace of a coordinate space, canonicalized to reduced echelon form.
template <Field S>
class Subspace {
public:
    Subspace() = default;
    Subspace(std::size_t parent_dim, const std::vector<Vector<S>>& spanning);

    static Subspace whole(std::size_t n);
    static Subspace zero(std::size_t n) { return Subspace(n, {}); }

    std::size_t parent_dim() const { return parent_dim_; }
    std::size_t dim() const { return basis_.size(); }
    /// Reduced echelon basis; each vector has a 1 in its pivot column.
    const std::vector<Vector<S>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector<S>& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    /// v minus its echelon reduction against this subspace (zero iff v is inside).
    Vector<S> reduce(const Vector<S>& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.parent_dim_ == b.parent_dim_ && a.basis_ == b.basis_;
    }

private:
    std::size_t parent_dim_ = 0;
    std::vector<Vector<S>> basis_;
    std::vector<std::size_t> pivots_;
};

/// Elementwise backend conversion (exact -> float only).
template <Field To, Field From>
LieAlgebra<To> convert_algebra(const LieAlgebra<From>& alg) {
    std::vector<BracketEntry<To>> out;
    for (const auto& e : alg.entries()) {
        BracketEntry<To> c{e.i, e.j, {}};
        for (const auto& t : e.terms) c.terms.push_back({t.k, convert_scalar<To>(t.value)});
        out.push_back(std::move(c));
    }
    return LieAlgebra<To>(alg.name(), alg.labels(), out);
}

}  // namespace kmu
