#include "kmu/riemannian.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kmu/algebra.hpp"
#include "kmu/linalg.hpp"
#include "kmu/parallel.hpp"

namespace kmu {

template <Field S>
CurvaturePackage<S>::CurvaturePackage(MetricLieAlgebra<S> m) : m_(std::move(m)) {
    const std::size_t n = m_.dim();
    const auto& alg = m_.algebra();

    // Lowered structure constants: low[i*n+j][k] = <[e_i,e_j], e_k>.
    std::vector<Vector<S>> low(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) low[i * n + j] = m_.lower(alg.structure(i, j));

    const S half = from_rational<S>(1, 2);
    gamma_.assign(n * n, Vector<S>(n, S(0)));
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vector<S> b(n, S(0));
            for (std::size_t k = 0; k < n; ++k) b[k] = low[i * n + j][k] - low[j * n + k][i] + low[k * n + i][j];
            auto g = m_.raise(b);
            for (auto& x : g) x *= half;
            gamma_[i * n + j] = std::move(g);
        }
    });

    // D_w e_k for an arbitrary w, and D_{e_i} v for an arbitrary v.
    auto nabla_along = [&](const Vector<S>& w, std::size_t k) {
        Vector<S> out(n, S(0));
        for (std::size_t l = 0; l < n; ++l) axpy(w[l], gamma_[l * n + k], out);
        return out;
    };
    auto nabla_basis = [&](std::size_t i, const Vector<S>& v) {
        Vector<S> out(n, S(0));
        for (std::size_t l = 0; l < n; ++l) axpy(v[l], gamma_[i * n + l], out);
        return out;
    };

    r_.assign(n * n * n, Vector<S>(n, S(0)));
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector<S> v = nabla_basis(i, gamma_[j * n + k]) - nabla_basis(j, gamma_[i * n + k]) -
                              nabla_along(alg.structure(i, j), k);
                r_[(j * n + i) * n + k] = -v;
                r_[(i * n + j) * n + k] = std::move(v);
            }
    });

    const auto& ginv = m_.gram_inverse();
    ricci_ = Matrix<S>(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector<S> col(n, S(0));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                if (is_zero(ginv(k, l), 0.0)) continue;
                axpy(ginv(k, l), curvature_basis(i, k, l), col);
            }
        ricci_.set_column(i, col);
    }
    scalar_ = ricci_.trace();
}

template <Field S>
Vector<S> CurvaturePackage<S>::connection(const Vector<S>& x, const Vector<S>& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("connection: dimension mismatch");
    Vector<S> out(n, S(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(x[i], 0.0)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(y[j], 0.0)) continue;
            axpy(S(x[i] * y[j]), connection_basis(i, j), out);
        }
    }
    return out;
}

template <Field S>
Vector<S> CurvaturePackage<S>::curvature(const Vector<S>& x, const Vector<S>& y, const Vector<S>& z) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n || z.size() != n) throw std::invalid_argument("curvature: dimension mismatch");
    Vector<S> out(n, S(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(x[i], 0.0)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || is_zero(y[j], 0.0)) continue;
            const S xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(z[k], 0.0)) continue;
                axpy(S(xy * z[k]), curvature_basis(i, j, k), out);
            }
        }
    }
    return out;
}

template <Field S>
S CurvaturePackage<S>::riemann(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return m_.inner(curvature_basis(i, j, k), unit_vector<S>(dim(), l));
}

template <Field S>
S CurvaturePackage<S>::sectional(const Vector<S>& x, const Vector<S>& y) const {
    const S den = m_.inner(x, x) * m_.inner(y, y) - m_.inner(x, y) * m_.inner(x, y);
    const double scale = std::max(1.0, max_abs(x) * max_abs(x) * max_abs(y) * max_abs(y));
    if (is_zero(den, 1e-12 * scale)) throw std::invalid_argument("sectional curvature of a degenerate plane");
    return m_.inner(curvature(x, y, y), x) / den;
}

// ---- sampling minimizer ----------------------------------------------------

MetricLieAlgebra<double> orthonormalize(const MetricLieAlgebra<double>& m, Matrix<double>* frame) {
    const std::size_t n = m.dim();
    const Matrix<double> l = cholesky(m.gram());
    const Matrix<double> lt = l.transpose();
    const Matrix<double> f = inverse(lt);  // columns: orthonormal frame
    std::vector<Vector<double>> cols;
    for (std::size_t a = 0; a < n; ++a) cols.push_back(f.column(a));
    std::vector<BracketEntry<double>> entries;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto c = lt * m.algebra().bracket(cols[a], cols[b]);
            BracketEntry<double> e{a, b, {}};
            for (std::size_t k = 0; k < n; ++k)
                if (c[k] != 0.0) e.terms.push_back({k, c[k]});
            if (!e.terms.empty()) entries.push_back(std::move(e));
        }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) labels.push_back("f" + std::to_string(a + 1));
    if (frame) *frame = f;
    return MetricLieAlgebra<double>(LieAlgebra<double>(m.name() + "-orthonormal", labels, entries));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct PlaneObjective {
    std::size_t n;
    std::vector<double> rm;  // rm[((a*n+b)*n+c)*n+d] = <R(e_a,e_b)e_c, e_d>, orthonormal basis

    double at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const { return rm[((a * n + b) * n + c) * n + d]; }

    // K for an orthonormal pair, with the Euclidean gradients of <R(x,y)y,x>.
    double eval(const std::vector<double>& x, const std::vector<double>& y, std::vector<double>* gx,
                std::vector<double>* gy) const {
        std::vector<double> my(n * n, 0.0);  // my[a*n+d] = sum_bc rm_abcd y_b y_c
        std::vector<double> nx(n * n, 0.0);  // nx[b*n+c] = sum_ad rm_abcd x_a x_d
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t d = 0; d < n; ++d) {
                        const double r = at(a, b, c, d);
                        if (r == 0.0) continue;
                        my[a * n + d] += r * y[b] * y[c];
                        nx[b * n + c] += r * x[a] * x[d];
                    }
        double k = 0.0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t d = 0; d < n; ++d) k += x[a] * my[a * n + d] * x[d];
        if (gx && gy) {
            gx->assign(n, 0.0);
            gy->assign(n, 0.0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t d = 0; d < n; ++d) {
                    (*gx)[a] += (my[a * n + d] + my[d * n + a]) * x[d];
                    (*gy)[a] += (nx[a * n + d] + nx[d * n + a]) * y[d];
                }
            // Gradient of the quotient at an orthonormal pair.
            for (std::size_t a = 0; a < n; ++a) {
                (*gx)[a] -= 2.0 * k * x[a];
                (*gy)[a] -= 2.0 * k * y[a];
            }
        }
        return k;
    }
};

// Gram-Schmidt; false if the pair is (numerically) dependent.
bool orthonormal_pair(std::vector<double>& x, std::vector<double>& y) {
    auto norm = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double t : v) s += t * t;
        return std::sqrt(s);
    };
    const double nx = norm(x);
    if (nx < 1e-300) return false;
    for (auto& t : x) t /= nx;
    double p = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) p += x[i] * y[i];
    for (std::size_t i = 0; i < x.size(); ++i) y[i] -= p * x[i];
    const double ny = norm(y);
    if (ny < 1e-12) return false;
    for (auto& t : y) t /= ny;
    return true;
}

}  // namespace

template <Field S>
SectionalMinimum min_sectional_sampled(const MetricLieAlgebra<S>& m, std::size_t samples, std::uint64_t seed,
                                       std::size_t refine_steps) {
    if (samples == 0) throw std::invalid_argument("min_sectional_sampled: samples must be >= 1");
    Matrix<double> frame;
    const auto on = orthonormalize(convert_metric<double>(m), &frame);
    const std::size_t n = on.dim();
    SectionalMinimum best;
    if (n < 2) throw std::invalid_argument("min_sectional_sampled: dimension must be >= 2");

    const CurvaturePackage<double> pkg(on);
    PlaneObjective obj{n, std::vector<double>(n * n * n * n, 0.0)};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto& v = pkg.curvature_basis(a, b, c);
                for (std::size_t d = 0; d < n; ++d) obj.rm[((a * n + b) * n + c) * n + d] = v[d];
            }
    double scale = 0.0;
    for (double r : obj.rm) scale = std::max(scale, std::fabs(r));

    std::vector<SectionalMinimum> per_sample(samples);
    parallel_for(samples, [&](std::size_t s) {
        std::mt19937_64 gen(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(s))));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> x(n), y(n);
        do {
            for (auto& t : x) t = gauss(gen);
            for (auto& t : y) t = gauss(gen);
        } while (!orthonormal_pair(x, y));

        std::vector<double> gx, gy;
        double k = obj.eval(x, y, &gx, &gy);
        double step = scale > 0.0 ? 0.5 / scale : 1.0;
        for (std::size_t it = 0; it < refine_steps; ++it) {
            bool accepted = false;
            for (int tries = 0; tries < 30 && !accepted; ++tries) {
                std::vector<double> xt(n), yt(n);
                for (std::size_t a = 0; a < n; ++a) {
                    xt[a] = x[a] - step * gx[a];
                    yt[a] = y[a] - step * gy[a];
                }
                if (!orthonormal_pair(xt, yt)) {
                    step *= 0.5;
                    continue;
                }
                const double kt = obj.eval(xt, yt, nullptr, nullptr);
                if (kt < k) {
                    x = std::move(xt);
                    y = std::move(yt);
                    k = obj.eval(x, y, &gx, &gy);
                    step *= 2.0;
                    accepted = true;
                } else {
                    step *= 0.5;
                }
            }
            if (!accepted) break;
        }
        per_sample[s] = SectionalMinimum{k, x, y};
    });

    best = per_sample.front();
    for (const auto& s : per_sample)
        if (s.value < best.value) best = s;
    best.x = frame * best.x;
    best.y = frame * best.y;
    return best;
}

template <Field S>
Vector<S> mean_curvature_vector(const MetricLieAlgebra<S>& m) {
    const std::size_t n = m.dim();
    Vector<S> traces(n, S(0));
    for (std::size_t k = 0; k < n; ++k) traces[k] = m.algebra().ad_basis(k).trace();
    return m.raise(traces);
}

// ---- Iwasawa type ------------------------------------------------------------

namespace {

template <Field S>
Matrix<S> restricted_form(const MetricLieAlgebra<S>& m, const Matrix<S>& ad, const std::vector<Vector<S>>& nbasis) {
    // q(u, v) = <ad u, v> on the derived algebra.
    Matrix<S> q(nbasis.size(), nbasis.size());
    for (std::size_t r = 0; r < nbasis.size(); ++r) {
        const auto au = ad * nbasis[r];
        for (std::size_t c = 0; c < nbasis.size(); ++c) q(r, c) = m.inner(au, nbasis[c]);
    }
    return q;
}

// Small integer coefficient vectors ordered by l1 norm.
std::vector<std::vector<long>> integer_candidates(std::size_t k, long max_l1) {
    std::vector<std::vector<long>> out;
    if (k == 0) return out;
    std::vector<long> cur(k, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long remaining) {
        if (pos + 1 == k) {
            if (remaining == 0) {
                cur[pos] = 0;
                out.push_back(cur);
            } else {
                cur[pos] = remaining;
                out.push_back(cur);
                cur[pos] = -remaining;
                out.push_back(cur);
            }
            return;
        }
        for (long v = -remaining; v <= remaining; ++v) {
            cur[pos] = v;
            rec(pos + 1, remaining - std::labs(v));
        }
    };
    for (long l1 = 1; l1 <= max_l1; ++l1) rec(0, l1);
    return out;
}

}  // namespace

template <Field S>
IwasawaResult is_iwasawa_type(const MetricLieAlgebra<S>& m) {
    const auto& alg = m.algebra();
    const std::size_t n = m.dim();
    if (!series_analysis(alg).solvable) throw std::invalid_argument("is_iwasawa_type: algebra is not solvable");

    IwasawaResult out;
    out.report.subject = m.name();
    const Subspace<S> derived = derived_algebra(alg);
    const auto abasis = orthogonal_complement(m, derived);
    const auto& nbasis = derived.basis();

    // (1) a abelian.
    {
        std::string witness;
        for (std::size_t i = 0; i < abasis.size() && witness.empty(); ++i)
            for (std::size_t j = i + 1; j < abasis.size(); ++j)
                if (!is_zero_vector(alg.bracket(abasis[i], abasis[j]))) {
                    witness = combination_label(alg.labels(), abasis[i]) + "," + combination_label(alg.labels(), abasis[j]);
                    break;
                }
        auto& rec = out.report.add("a_abelian", witness.empty(), witness);
        rec.scalars.push_back(ReportScalar{"dim_a", static_cast<double>(abasis.size()), std::to_string(abasis.size())});
    }

    // (2) ad_A symmetric (linear in A, basis suffices) and A -> ad_A injective.
    std::vector<Matrix<S>> ads;
    for (const auto& a : abasis) ads.push_back(alg.ad(a));
    {
        std::string witness;
        for (std::size_t i = 0; i < ads.size(); ++i)
            if (!(ads[i] - m.adjoint(ads[i])).is_zero()) {
                witness = combination_label(alg.labels(), abasis[i]);
                break;
            }
        bool injective = true;
        if (!ads.empty()) {
            Matrix<S> flat(n * n, ads.size());
            for (std::size_t i = 0; i < ads.size(); ++i)
                for (std::size_t u = 0; u < n * n; ++u) flat(u, i) = ads[i].data()[u];
            injective = rank(flat) == ads.size();
        }
        out.report.add("ad_a_symmetric", witness.empty(), witness);
        out.report.add("ad_a_injective", injective);
    }

    // (3) some ad_{A0} positive definite on [s, s].
    bool found = false;
    if (nbasis.empty()) {
        found = true;
        out.witness = std::vector<double>(n, 0.0);
        out.witness_label = "0";
        out.report.add("positive_direction", Status::pass, "0", "derived algebra is zero");
    } else if (!abasis.empty()) {
        std::vector<Matrix<S>> forms;
        for (const auto& ad : ads) forms.push_back(restricted_form(m, ad, nbasis));

        for (const auto& coeff : integer_candidates(abasis.size(), 6)) {
            Matrix<S> q(nbasis.size(), nbasis.size());
            Vector<S> a0(n, S(0));
            for (std::size_t i = 0; i < coeff.size(); ++i) {
                if (coeff[i] == 0) continue;
                q += forms[i] * S(coeff[i]);
                axpy(S(coeff[i]), abasis[i], a0);
            }
            if (is_positive_definite(q)) {
                found = true;
                out.witness = convert_vector<double>(a0);
                out.witness_label = combination_label(alg.labels(), a0);
                break;
            }
        }

        if (found) {
            out.report.add("positive_direction", Status::pass, out.witness_label,
                           is_exact_v<S> ? "certified by exact LDL^T" : "certified by LDL^T");
        } else if (abasis.size() <= 2) {
            // Joint eigenvalues of the commuting symmetric forms are linear in A;
            // test the midpoints of the sectors cut out by their zero lines.
            std::vector<Matrix<double>> fq;
            for (const auto& f : forms) fq.push_back(convert_matrix<double>(f));
            const Matrix<double> gn = [&] {
                Matrix<double> g(nbasis.size(), nbasis.size());
                for (std::size_t r = 0; r < nbasis.size(); ++r)
                    for (std::size_t c = 0; c < nbasis.size(); ++c)
                        g(r, c) = to_double(m.inner(nbasis[r], nbasis[c]));
                return g;
            }();
            const Matrix<double> linv = inverse(cholesky(gn));
            std::vector<Matrix<double>> sym;
            for (const auto& f : fq) sym.push_back(linv * f * linv.transpose());

            auto min_eig = [&](double t0, double t1) {
                Matrix<double> q = sym[0] * t0;
                if (sym.size() > 1) q += sym[1] * t1;
                return symmetric_eigenvalues(q).front();
            };
            // Sampling the unit circle of the pencil; the forms commute, so the
            // minimum joint eigenvalue is piecewise linear in (cos, sin).
            std::vector<double> angles;
            const int grid = sym.size() == 1 ? 2 : 3600;
            for (int g = 0; g < grid; ++g) angles.push_back(2.0 * std::numbers::pi * g / grid);
            double best_val = -1.0;
            double best_angle = 0.0;
            for (double th : angles) {
                const double v = min_eig(std::cos(th), std::sin(th));
                if (v > best_val) {
                    best_val = v;
                    best_angle = th;
                }
            }
            const double tol = 1e-9 * std::max(1.0, fq[0].max_abs());
            if (best_val > tol) {
                found = true;
                std::vector<double> a0(n, 0.0);
                const double c0 = std::cos(best_angle);
                const double c1 = std::sin(best_angle);
                for (std::size_t r = 0; r < n; ++r) {
                    a0[r] += c0 * to_double(abasis[0][r]);
                    if (abasis.size() > 1) a0[r] += c1 * to_double(abasis[1][r]);
                }
                out.witness = a0;
                out.witness_label = "pencil angle " + std::to_string(best_angle);
                out.report.add("positive_direction", Status::pass, out.witness_label, "float pencil search");
            } else {
                auto& rec = out.report.add("positive_direction", Status::fail, {}, "no positive direction on the pencil");
                rec.scalars.push_back(ReportScalar{"best_min_eigenvalue", best_val, std::nullopt});
            }
        } else {
            out.report.add("positive_direction", Status::indeterminate, {}, "dim a > 2 and no integer witness");
        }
    } else {
        out.report.add("positive_direction", Status::fail, {}, "a is zero but [s,s] is not");
    }

    out.iwasawa = out.report.passed() &&
                  std::none_of(out.report.records.begin(), out.report.records.end(),
                               [](const CheckRecord& r) { return r.status == Status::indeterminate; });
    return out;
}

#define KMU_INSTANTIATE_RIEMANNIAN(S)                                                                         \
    template class CurvaturePackage<S>;                                                                      \
    template SectionalMinimum min_sectional_sampled(const MetricLieAlgebra<S>&, std::size_t, std::uint64_t,  \
                                                    std::size_t);                                            \
    template Vector<S> mean_curvature_vector(const MetricLieAlgebra<S>&);                                    \
    template IwasawaResult is_iwasawa_type(const MetricLieAlgebra<S>&);

KMU_INSTANTIATE_RIEMANNIAN(QSqrt2)
KMU_INSTANTIATE_RIEMANNIAN(double)

}  // namespace kmu
