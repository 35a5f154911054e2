#pragma once

// Curvature identities checked on the library's tables. Exact backends must
// give exact zeros; float backends are held to kFloatTol in max-norm.

#include <algorithm>
#include <string>

#include "kmu/riemannian.hpp"

namespace props {

inline constexpr double kFloatTol = 1e-10;

struct Residuals {
    double worst = 0.0;
    bool exact_zero = true;
    std::string worst_identity;

    template <class S>
    void feed(const S& x, const char* identity) {
        const double a = std::abs(kmu::to_double(x));
        if (!kmu::is_zero(x, 0.0)) exact_zero = false;
        if (a > worst) {
            worst = a;
            worst_identity = identity;
        }
    }
    template <class S>
    void feed_vector(const kmu::Vector<S>& v, const char* identity) {
        for (const auto& x : v) feed(x, identity);
    }
    template <class S>
    bool ok() const {
        if constexpr (kmu::is_exact_v<S>)
            return exact_zero;
        else
            return worst <= kFloatTol;
    }
};

/// R(x,y) = -R(y,x); <R(x,y)z,w> = -<R(x,y)w,z>; <R(x,y)z,w> = <R(z,w)x,y>;
/// first Bianchi; D_x y - D_y x = [x,y]; <D_x y,z> + <y,D_x z> = 0; Ric symmetric.
template <kmu::Field S>
Residuals geometry_residuals(const kmu::MetricLieAlgebra<S>& m) {
    using kmu::operator+;
    using kmu::operator-;
    const kmu::CurvaturePackage<S> pkg(m);
    const std::size_t n = m.dim();
    const auto& alg = m.algebra();
    const auto& g = m.gram();
    Residuals res;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            res.feed_vector(pkg.connection_basis(i, j) - pkg.connection_basis(j, i) - alg.structure(i, j),
                            "torsion-free");
            for (std::size_t k = 0; k < n; ++k) {
                const auto& dj = pkg.connection_basis(i, j);
                const auto& dk = pkg.connection_basis(i, k);
                res.feed(m.inner(dj, kmu::unit_vector<S>(n, k)) + m.inner(kmu::unit_vector<S>(n, j), dk),
                         "metric compatibility");
                res.feed_vector(pkg.curvature_basis(i, j, k) + pkg.curvature_basis(j, i, k), "R antisymmetry");
                res.feed_vector(pkg.curvature_basis(i, j, k) + pkg.curvature_basis(j, k, i) +
                                    pkg.curvature_basis(k, i, j),
                                "first Bianchi");
                for (std::size_t l = 0; l < n; ++l) {
                    res.feed(pkg.riemann(i, j, k, l) + pkg.riemann(i, j, l, k), "R skew in last pair");
                    res.feed(pkg.riemann(i, j, k, l) - pkg.riemann(k, l, i, j), "R pair symmetry");
                }
            }
        }
    const auto gric = g * pkg.ricci();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) res.feed(gric(i, j) - gric(j, i), "Ricci symmetry");
    return res;
}

/// max(1, largest structure constant)^2, the natural size of curvature
/// entries; float residuals of badly scaled algebras are compared against it.
template <kmu::Field S>
double curvature_scale(const kmu::MetricLieAlgebra<S>& m) {
    double c = 1.0;
    for (const auto& e : m.algebra().entries())
        for (const auto& t : e.terms) c = std::max(c, std::abs(kmu::to_double(t.value)));
    return c * c;
}

}  // namespace props
