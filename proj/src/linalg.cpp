#include "kmu/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace kmu {

template <Field S>
Echelon<S> rref(Matrix<S> m, double rel_tol) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    double tol = 0.0;
    if constexpr (!is_exact_v<S>) {
        const double scale = m.max_abs();
        tol = rel_tol * (scale > 0.0 ? scale : 1.0);
    }

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        if constexpr (is_exact_v<S>) {
            for (std::size_t i = r; i < rows; ++i)
                if (!m(i, c).is_zero()) {
                    best = i;
                    break;
                }
        } else {
            double best_mag = tol;
            for (std::size_t i = r; i < rows; ++i) {
                const double mag = std::fabs(m(i, c));
                if (mag > best_mag) {
                    best_mag = mag;
                    best = i;
                }
            }
        }
        if (best == rows) {
            if constexpr (!is_exact_v<S>)
                for (std::size_t i = r; i < rows; ++i) m(i, c) = 0.0;
            continue;
        }
        if (best != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));

        const S inv = S(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!is_zero(m(r, j), 0.0)) m(r, j) *= inv;
        m(r, c) = S(1);

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const S f = m(i, c);
            if (is_zero(f, 0.0)) continue;
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(m(r, j), 0.0)) m(i, j) -= f * m(r, j);
            m(i, c) = S(0);
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon<S>{std::move(m), std::move(pivots)};
}

template <Field S>
std::size_t rank(const Matrix<S>& m, double rel_tol) {
    return rref(m, rel_tol).rank();
}

template <Field S>
std::vector<Vector<S>> nullspace(const Matrix<S>& m, double rel_tol) {
    const auto e = rref(m, rel_tol);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<Vector<S>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector<S> v(cols, S(0));
        v[free] = S(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <Field S>
std::optional<Vector<S>> solve(const Matrix<S>& a, const Vector<S>& b, double rel_tol) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    Matrix<S> aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto e = rref(aug, rel_tol);
    Vector<S> x(a.cols(), S(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, a.cols());
    }
    if constexpr (!is_exact_v<S>) {
        // Elimination zeroes sub-tolerance columns; confirm against the original system.
        const auto res = a * x - b;
        const double scale = std::max({1.0, a.max_abs(), max_abs(b)});
        if (max_abs(res) > 1e-7 * scale) return std::nullopt;
    }
    return x;
}

template <Field S>
Matrix<S> inverse(const Matrix<S>& m) {
    if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<S> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = S(1);
    }
    const auto e = rref(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix<S> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

template <Field S>
S determinant(Matrix<S> m) {
    if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    S det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        if constexpr (is_exact_v<S>) {
            for (std::size_t i = c; i < n; ++i)
                if (!m(i, c).is_zero()) {
                    best = i;
                    break;
                }
        } else {
            double best_mag = 0.0;
            for (std::size_t i = c; i < n; ++i)
                if (std::fabs(m(i, c)) > best_mag) {
                    best_mag = std::fabs(m(i, c));
                    best = i;
                }
        }
        if (best == n) return S(0);
        if (best != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(best, j));
            det = -det;
        }
        det *= m(c, c);
        const S inv = S(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            const S f = m(i, c) * inv;
            if (is_zero(f, 0.0)) continue;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

template <Field S>
LeastSquares<S> least_squares(const Matrix<S>& a, const Vector<S>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("least_squares: shape mismatch");
    LeastSquares<S> out;
    if constexpr (is_exact_v<S>) {
        const Matrix<S> at = a.transpose();
        const Matrix<S> normal = at * a;
        const Vector<S> rhs = at * b;
        auto x = solve(normal, rhs);
        if (!x) throw std::logic_error("normal equations are always consistent");
        out.x = std::move(*x);
        out.rank = rank(normal);
    } else {
        Eigen::MatrixXd ea(a.rows(), a.cols());
        Eigen::VectorXd eb(b.size());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) ea(r, c) = a(r, c);
            eb(r) = b[r];
        }
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(ea);
        const double scale = std::max(1.0, a.max_abs());
        cod.setThreshold(kRankRelTol / scale);
        const Eigen::VectorXd ex = cod.solve(eb);
        out.x.assign(ex.data(), ex.data() + ex.size());
        out.rank = static_cast<std::size_t>(cod.rank());
    }
    const Vector<S> res = a * out.x - b;
    S worst(0);
    for (const auto& r : res) {
        const S mag = r < S(0) ? -r : r;
        if (worst < mag) worst = mag;
    }
    out.residual = worst;
    return out;
}

template <Field S>
bool is_positive_definite(const Matrix<S>& m, double rel_tol) {
    if (!m.square() || !is_symmetric(m)) return false;
    const std::size_t n = m.rows();
    Matrix<S> a = m;
    double tol = 0.0;
    if constexpr (!is_exact_v<S>) tol = rel_tol * std::max(1.0, m.max_abs());
    for (std::size_t k = 0; k < n; ++k) {
        if (sign_of(a(k, k), tol) <= 0) return false;
        const S inv = S(1) / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const S f = a(i, k) * inv;
            if (is_zero(f, 0.0)) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

template <Field S>
bool is_symmetric(const Matrix<S>& m, double tol) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (!is_zero(S(m(i, j) - m(j, i)), tol)) return false;
    return true;
}

template <Field S>
bool is_nilpotent_matrix(const Matrix<S>& m, double tol) {
    if (!m.square()) throw std::invalid_argument("nilpotency of a non-square matrix");
    Matrix<S> p = m;
    for (std::size_t k = 1; k < m.rows(); ++k) {
        if (p.is_zero(0.0)) return true;
        p = p * m;
    }
    if constexpr (is_exact_v<S>) {
        return p.is_zero(0.0);
    } else {
        const double scale = std::pow(std::max(1.0, m.max_abs()), static_cast<double>(m.rows()));
        return p.max_abs() <= tol * scale;
    }
}

std::vector<double> symmetric_eigenvalues(const Matrix<double>& m) {
    if (!m.square()) throw std::invalid_argument("eigenvalues of a non-square matrix");
    Eigen::MatrixXd em(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) em(r, c) = 0.5 * (m(r, c) + m(c, r));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(em, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> eigenvalue_real_parts(const Matrix<double>& m) {
    if (!m.square()) throw std::invalid_argument("eigenvalues of a non-square matrix");
    Eigen::MatrixXd em(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) em(r, c) = m(r, c);
    Eigen::EigenSolver<Eigen::MatrixXd> es(em, false);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i).real());
    std::sort(out.begin(), out.end());
    return out;
}

Matrix<double> cholesky(const Matrix<double>& m) {
    Eigen::MatrixXd em(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) em(r, c) = m(r, c);
    Eigen::LLT<Eigen::MatrixXd> llt(em);
    if (llt.info() != Eigen::Success) throw std::domain_error("matrix is not positive definite");
    const Eigen::MatrixXd l = llt.matrixL();
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = l(r, c);
    return out;
}

#define KMU_INSTANTIATE_LINALG(S)                                                          \
    template Echelon<S> rref(Matrix<S>, double);                                           \
    template std::size_t rank(const Matrix<S>&, double);                                   \
    template std::vector<Vector<S>> nullspace(const Matrix<S>&, double);                   \
    template std::optional<Vector<S>> solve(const Matrix<S>&, const Vector<S>&, double);   \
    template Matrix<S> inverse(const Matrix<S>&);                                          \
    template S determinant(Matrix<S>);                                                     \
    template LeastSquares<S> least_squares(const Matrix<S>&, const Vector<S>&);            \
    template bool is_positive_definite(const Matrix<S>&, double);                          \
    template bool is_symmetric(const Matrix<S>&, double);                                  \
    template bool is_nilpotent_matrix(const Matrix<S>&, double);

KMU_INSTANTIATE_LINALG(QSqrt2)
KMU_INSTANTIATE_LINALG(double)

}  // namespace kmu
