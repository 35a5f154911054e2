#include "kmu/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmu/linalg.hpp"

namespace kmu {

namespace {

template <Field S>
struct BracketBuilder {
    std::map<std::pair<std::size_t, std::size_t>, Vector<S>> table;
    std::size_t dim;

    void add(std::size_t i, std::size_t j, std::size_t k, const S& v) {
        if (is_zero(v, 0.0)) return;
        auto& slot = table.try_emplace({i, j}, Vector<S>(dim, S(0))).first->second;
        slot[k] += v;
    }

    std::vector<BracketEntry<S>> entries() const {
        std::vector<BracketEntry<S>> out;
        for (const auto& [key, vec] : table) {
            BracketEntry<S> e{key.first, key.second, {}};
            for (std::size_t k = 0; k < dim; ++k)
                if (!is_zero(vec[k], 0.0)) e.terms.push_back({k, vec[k]});
            if (!e.terms.empty()) out.push_back(std::move(e));
        }
        return out;
    }
};

std::vector<std::string> contact_labels(std::size_t n) {
    std::vector<std::string> labels{"xi"};
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("X" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("Y" + std::to_string(i));
    return labels;
}

// phi X_i = Y_i, phi Y_i = -X_i, xi = e_0.
template <Field S>
AlmostContactStructure<S> standard_contact_structure(std::size_t n) {
    const std::size_t d = 2 * n + 1;
    AlmostContactStructure<S> st{unit_vector<S>(d, 0), unit_vector<S>(d, 0), Matrix<S>(d, d)};
    for (std::size_t i = 1; i <= n; ++i) {
        st.phi(n + i, i) = S(1);
        st.phi(i, n + i) = S(-1);
    }
    return st;
}

std::string scalar_tag(const QSqrt2& x) { return x.to_string(); }
std::string scalar_tag(double x) { return FieldTraits<double>::to_string(x); }

}  // namespace

template <Field S>
ContactMetricAlgebra<S> build_g_alpha_beta(const S& alpha, const S& beta, std::size_t n) {
    if (n < 2) throw std::invalid_argument("g(alpha, beta) needs n >= 2");
    const std::size_t d = 2 * n + 1;
    const S half = from_rational<S>(1, 2);
    const S a2 = alpha * alpha * half;
    const S b2 = beta * beta * half;
    const S ab = alpha * beta * half;
    auto X = [](std::size_t i) { return i; };
    auto Y = [n](std::size_t i) { return n + i; };
    constexpr std::size_t xi = 0;

    BracketBuilder<S> b{{}, d};
    b.add(xi, X(1), X(2), -ab);
    b.add(xi, X(1), Y(1), -a2);
    b.add(xi, X(2), X(1), ab);
    b.add(xi, X(2), Y(2), -a2);
    b.add(xi, Y(1), X(1), b2);
    b.add(xi, Y(1), Y(2), -ab);
    b.add(xi, Y(2), X(2), b2);
    b.add(xi, Y(2), Y(1), ab);
    for (std::size_t i = 3; i <= n; ++i) {
        b.add(xi, X(i), Y(i), -a2);
        b.add(xi, Y(i), X(i), b2);
    }
    for (std::size_t i = 2; i <= n; ++i) b.add(X(1), X(i), X(i), alpha);
    for (std::size_t i = 1; i <= n; ++i)
        if (i != 2) b.add(Y(2), Y(i), Y(i), beta);
    b.add(X(1), Y(1), X(2), -beta);
    b.add(X(1), Y(1), xi, S(2));
    b.add(X(2), Y(1), X(1), beta);
    b.add(X(2), Y(1), Y(2), -alpha);
    b.add(X(2), Y(2), Y(1), alpha);
    b.add(X(2), Y(2), xi, S(2));
    for (std::size_t i = 3; i <= n; ++i) {
        b.add(X(2), Y(i), X(i), beta);
        b.add(X(i), Y(1), Y(i), -alpha);
        b.add(X(i), Y(i), X(2), -beta);
        b.add(X(i), Y(i), Y(1), alpha);
        b.add(X(i), Y(i), xi, S(2));
    }
    std::string name = "g(" + scalar_tag(alpha) + "," + scalar_tag(beta) + ")-" + std::to_string(d);
    return {MetricLieAlgebra<S>(LieAlgebra<S>(std::move(name), contact_labels(n), b.entries())),
            standard_contact_structure<S>(n)};
}

template <Field S>
ContactMetricAlgebra<S> build_heisenberg(std::size_t n) {
    if (n < 1) throw std::invalid_argument("Heisenberg algebra needs n >= 1");
    const std::size_t d = 2 * n + 1;
    BracketBuilder<S> b{{}, d};
    for (std::size_t i = 1; i <= n; ++i) b.add(i, n + i, 0, S(2));
    return {MetricLieAlgebra<S>(LieAlgebra<S>("heisenberg-" + std::to_string(d), contact_labels(n), b.entries())),
            standard_contact_structure<S>(n)};
}

template <Field S>
HermitianAlgebra<S> build_solvable_model(const S& c, std::size_t m) {
    if (m < 1) throw std::invalid_argument("solvable model needs m >= 1");
    if (!(S(0) < c)) throw std::invalid_argument("solvable model needs c > 0");
    const std::size_t d = 2 * m + 4;
    constexpr std::size_t A1 = 0, A2 = 1, X0 = 2;
    auto Y = [](std::size_t i) { return 2 + i; };
    auto Z = [m](std::size_t i) { return 2 + m + i; };
    const std::size_t W0 = d - 1;
    const S hc = c * from_rational<S>(1, 2);

    BracketBuilder<S> b{{}, d};
    b.add(A1, X0, X0, c);
    b.add(A2, W0, W0, c);
    for (std::size_t i = 1; i <= m; ++i) {
        b.add(A1, Y(i), Y(i), -hc);
        b.add(A1, Z(i), Z(i), hc);
        b.add(A2, Y(i), Y(i), hc);
        b.add(A2, Z(i), Z(i), hc);
        b.add(X0, Y(i), Z(i), c);
        b.add(Y(i), Z(i), W0, c);
    }
    std::vector<std::string> labels{"A1", "A2", "X0"};
    for (std::size_t i = 1; i <= m; ++i) labels.push_back("Y" + std::to_string(i));
    for (std::size_t i = 1; i <= m; ++i) labels.push_back("Z" + std::to_string(i));
    labels.push_back("W0");

    Matrix<S> J(d, d);
    J(X0, A1) = S(-1);
    J(A1, X0) = S(1);
    J(W0, A2) = S(1);
    J(A2, W0) = S(-1);
    for (std::size_t i = 1; i <= m; ++i) {
        J(Z(i), Y(i)) = S(1);
        J(Y(i), Z(i)) = S(-1);
    }
    std::string name = "s(" + scalar_tag(c) + ")-" + std::to_string(d);
    return {MetricLieAlgebra<S>(LieAlgebra<S>(std::move(name), std::move(labels), b.entries())), std::move(J)};
}

template <Field S>
Vector<S> solvable_model_mean_curvature(const S& c, std::size_t m) {
    Vector<S> h(2 * m + 4, S(0));
    h[0] = c;
    h[1] = S(static_cast<long>(m + 1)) * c;
    return h;
}

template <Field S>
MetricLieAlgebra<S> build_hyperbolic_plane() {
    return MetricLieAlgebra<S>(LieAlgebra<S>("hyperbolic-plane", {"A", "X"}, {{0, 1, {{1, S(1)}}}}));
}

template <Field S>
MetricLieAlgebra<S> build_flat(std::size_t dim) {
    return MetricLieAlgebra<S>(LieAlgebra<S>::abelian(dim).renamed("abelian-" + std::to_string(dim)));
}

// ---- so(2, n) --------------------------------------------------------------

ExactMatrix indefinite_form(std::size_t n) {
    ExactMatrix f = ExactMatrix::identity(n + 2);
    f(0, 0) = QSqrt2(-1);
    f(1, 1) = QSqrt2(-1);
    return f;
}

bool in_so2n(const ExactMatrix& x, std::size_t n) {
    const ExactMatrix f = indefinite_form(n);
    return (x.transpose() * f + f * x).is_zero(0.0);
}

MatrixBasis so2n_basis(std::size_t n) {
    const std::size_t N = n + 2;
    const ExactMatrix f = indefinite_form(n);
    MatrixBasis out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            ExactMatrix k(N, N);
            k(i, j) = QSqrt2(1);
            k(j, i) = QSqrt2(-1);
            out.labels.push_back("K" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            out.elements.push_back(f * k);
        }
    return out;
}

MatrixBasis build_so2n_iwasawa(std::size_t n, const QSqrt2& c) {
    if (n < 3) throw std::invalid_argument("so(2, n) Iwasawa model needs n >= 3");
    const std::size_t N = n + 2;
    const QSqrt2 hc = c * QSqrt2::rational(1, 2);
    const QSqrt2 rc = c / QSqrt2::sqrt2();
    MatrixBasis out;
    auto put = [&](std::string label, ExactMatrix m) {
        out.labels.push_back(std::move(label));
        out.elements.push_back(std::move(m));
    };

    ExactMatrix h1(N, N), h2(N, N);
    h1(0, 2) = h1(2, 0) = QSqrt2(1);
    h2(1, 3) = h2(3, 1) = QSqrt2(1);
    put("A1", (h1 - h2) * hc);
    put("A2", (h1 + h2) * hc);

    // 2x2 blocks U = [[0,1],[-1,0]], V = [[0,1],[1,0]] placed at (r, c).
    auto block = [](ExactMatrix& m, std::size_t r, std::size_t c, const std::array<long, 4>& b, long s) {
        m(r, c) += QSqrt2(s * b[0]);
        m(r, c + 1) += QSqrt2(s * b[1]);
        m(r + 1, c) += QSqrt2(s * b[2]);
        m(r + 1, c + 1) += QSqrt2(s * b[3]);
    };
    constexpr std::array<long, 4> U{0, 1, -1, 0};
    constexpr std::array<long, 4> V{0, 1, 1, 0};

    ExactMatrix x0(N, N);
    block(x0, 0, 0, U, 1);
    block(x0, 0, 2, V, 1);
    block(x0, 2, 0, V, 1);
    block(x0, 2, 2, U, 1);
    put("X0", x0 * hc);

    // Y_i uses the second row of each upper block, Z_i the first.
    auto yz = [&](std::size_t row, std::size_t i) {
        ExactMatrix m(N, N);
        const std::size_t col = 4 + i;
        m(row, col) = QSqrt2(1);
        m(row + 2, col) = QSqrt2(1);
        m(col, row) = QSqrt2(1);
        m(col, row + 2) = QSqrt2(-1);
        return m * rc;
    };
    for (std::size_t i = 0; i < n - 2; ++i) put("Y" + std::to_string(i + 1), yz(1, i));
    for (std::size_t i = 0; i < n - 2; ++i) put("Z" + std::to_string(i + 1), yz(0, i));

    ExactMatrix w0(N, N);
    block(w0, 0, 0, U, -1);
    block(w0, 0, 2, U, 1);
    block(w0, 2, 0, U, -1);
    block(w0, 2, 2, U, 1);
    put("W0", w0 * hc);
    return out;
}

ExactMatrix iwasawa_model_gram(const MatrixBasis& basis, const QSqrt2& c) {
    const std::size_t k = basis.elements.size();
    const QSqrt2 c2 = c * c;
    ExactMatrix g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const bool ai = i < 2;
            const bool aj = j < 2;
            if (ai != aj) continue;
            if (ai)
                g(i, j) = ExactMatrix(basis.elements[i] * basis.elements[j]).trace() / c2;
            else
                g(i, j) = ExactMatrix(basis.elements[i].transpose() * basis.elements[j]).trace() / (QSqrt2(2) * c2);
        }
    return g;
}

LieAlgebra<QSqrt2> matrix_structure_constants(const MatrixBasis& basis, std::string name) {
    const std::size_t k = basis.elements.size();
    if (k == 0) throw std::invalid_argument("empty matrix basis");
    const std::size_t sz = basis.elements.front().data().size();
    std::vector<Vector<QSqrt2>> flat;
    for (const auto& e : basis.elements) flat.push_back(e.data());
    const ExactMatrix cols = ExactMatrix::from_columns(flat, sz);
    if (rank(cols) != k) throw std::invalid_argument("matrix basis is linearly dependent");

    std::vector<BracketEntry<QSqrt2>> entries;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const auto& a = basis.elements[i];
            const auto& b = basis.elements[j];
            const ExactMatrix comm = a * b - b * a;
            const auto coords = solve(cols, comm.data());
            if (!coords)
                throw std::invalid_argument("[" + basis.labels[i] + ", " + basis.labels[j] + "] leaves the span");
            BracketEntry<QSqrt2> e{i, j, {}};
            for (std::size_t t = 0; t < k; ++t)
                if (!(*coords)[t].is_zero()) e.terms.push_back({t, (*coords)[t]});
            if (!e.terms.empty()) entries.push_back(std::move(e));
        }
    return LieAlgebra<QSqrt2>(std::move(name), basis.labels, entries);
}

namespace {

// Coordinates of X in so2n_basis: (I X)(i, j) for i < j.
Vector<QSqrt2> so2n_coordinates(const ExactMatrix& x, std::size_t n) {
    const ExactMatrix k = indefinite_form(n) * x;
    Vector<QSqrt2> out;
    for (std::size_t i = 0; i < n + 2; ++i)
        for (std::size_t j = i + 1; j < n + 2; ++j) out.push_back(k(i, j));
    return out;
}

ExactMatrix so2n_ad(const ExactMatrix& x, const MatrixBasis& basis, std::size_t n) {
    const std::size_t k = basis.elements.size();
    ExactMatrix ad(k, k);
    for (std::size_t c = 0; c < k; ++c) {
        const auto& e = basis.elements[c];
        ad.set_column(c, so2n_coordinates(ExactMatrix(x * e - e * x), n));
    }
    return ad;
}

std::pair<ExactMatrix, ExactMatrix> cartan_pair(std::size_t n) {
    const std::size_t N = n + 2;
    ExactMatrix h1(N, N), h2(N, N);
    h1(0, 2) = h1(2, 0) = QSqrt2(1);
    h2(1, 3) = h2(3, 1) = QSqrt2(1);
    return {h1, h2};
}

bool lex_positive(const std::array<long, 2>& r) { return r[0] > 0 || (r[0] == 0 && r[1] > 0); }

}  // namespace

bool RootDatum::complete() const {
    std::size_t s = zero_dim;
    for (const auto& r : roots) s += r.dim;
    return s == total_dim;
}

RootDatum root_space_decomposition(std::size_t n) {
    if (n < 3) throw std::invalid_argument("root_space_decomposition needs n >= 3");
    const auto basis = so2n_basis(n);
    const auto [h1, h2] = cartan_pair(n);
    const ExactMatrix ad1 = so2n_ad(h1, basis, n);
    const ExactMatrix ad2 = so2n_ad(h2, basis, n);
    const std::size_t k = basis.elements.size();
    const ExactMatrix id = ExactMatrix::identity(k);

    RootDatum out;
    out.total_dim = k;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            ExactMatrix stacked(2 * k, k);
            const ExactMatrix m1 = ad1 - id * QSqrt2(a);
            const ExactMatrix m2 = ad2 - id * QSqrt2(b);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) {
                    stacked(r, c) = m1(r, c);
                    stacked(k + r, c) = m2(r, c);
                }
            const auto kernel = nullspace(stacked);
            if (kernel.empty()) continue;
            if (a == 0 && b == 0) {
                out.zero_dim = kernel.size();
                continue;
            }
            RootSpace rs{{a, b}, kernel.size(), {}};
            for (const auto& coords : kernel) {
                ExactMatrix x(n + 2, n + 2);
                for (std::size_t t = 0; t < k; ++t)
                    if (!coords[t].is_zero()) x += basis.elements[t] * coords[t];
                rs.space.push_back(std::move(x));
            }
            out.roots.push_back(std::move(rs));
        }
    for (const auto& r : out.roots)
        if (lex_positive(r.root)) out.positive.push_back(r);
    for (const auto& r : out.positive) {
        bool decomposable = false;
        for (const auto& p : out.positive)
            for (const auto& q : out.positive)
                if (p.root[0] + q.root[0] == r.root[0] && p.root[1] + q.root[1] == r.root[1]) decomposable = true;
        if (!decomposable) out.simple.push_back(r);
    }
    return out;
}

QSqrt2 killing_trace_ratio(std::size_t n) {
    const auto basis = so2n_basis(n);
    const std::size_t k = basis.elements.size();
    std::vector<ExactMatrix> ads;
    for (const auto& e : basis.elements) ads.push_back(so2n_ad(e, basis, n));
    std::optional<QSqrt2> ratio;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            const QSqrt2 kill = ExactMatrix(ads[i] * ads[j]).trace();
            const QSqrt2 tr = ExactMatrix(basis.elements[i] * basis.elements[j]).trace();
            if (tr.is_zero()) {
                if (!kill.is_zero()) throw std::logic_error("Killing form is not proportional to the trace form");
                continue;
            }
            const QSqrt2 r = kill / tr;
            if (ratio && *ratio != r) throw std::logic_error("Killing form is not proportional to the trace form");
            ratio = r;
        }
    if (!ratio) throw std::logic_error("trace form vanishes on the basis");
    return *ratio;
}

QSqrt2 highest_root_curvature(std::size_t n, const QSqrt2& c) {
    const auto datum = root_space_decomposition(n);
    if (datum.simple.size() != 2) throw std::logic_error("expected two simple restricted roots");
    const auto& s1 = datum.simple[0].root;
    const auto& s2 = datum.simple[1].root;
    const ExactMatrix sm{{QSqrt2(s1[0]), QSqrt2(s2[0])}, {QSqrt2(s1[1]), QSqrt2(s2[1])}};
    const ExactMatrix sinv = inverse(sm);

    const RootSpace* highest = nullptr;
    QSqrt2 best_height(-1);
    for (const auto& r : datum.positive) {
        const auto coeff = sinv * Vector<QSqrt2>{QSqrt2(r.root[0]), QSqrt2(r.root[1])};
        const QSqrt2 height = coeff[0] + coeff[1];
        if (best_height < height) {
            best_height = height;
            highest = &r;
        }
    }
    const auto [h1, h2] = cartan_pair(n);
    const QSqrt2 c2 = c * c;
    const ExactMatrix g{{ExactMatrix(h1 * h1).trace() / c2, ExactMatrix(h1 * h2).trace() / c2},
                        {ExactMatrix(h2 * h1).trace() / c2, ExactMatrix(h2 * h2).trace() / c2}};
    const Vector<QSqrt2> alpha{QSqrt2(highest->root[0]), QSqrt2(highest->root[1])};
    return -dot(alpha, inverse(g) * alpha);
}

ExactMatrix cartan_involution(const ExactMatrix& x, std::size_t n) {
    const ExactMatrix f = indefinite_form(n);
    return f * x * f;
}

MatrixAlgebra build_so2n(std::size_t n) {
    MatrixAlgebra g;
    g.n = n;
    g.form = indefinite_form(n);
    g.basis = so2n_basis(n);
    for (std::size_t t = 0; t < g.basis.elements.size(); ++t) {
        const auto& x = g.basis.elements[t];
        const ExactMatrix th = cartan_involution(x, n);
        MatrixBasis* target = nullptr;
        if (th == x)
            target = &g.k;
        else if (th == -x)
            target = &g.p;
        else
            throw std::logic_error("so(2, n) basis element " + g.basis.labels[t] + " is not a theta eigenvector");
        target->labels.push_back(g.basis.labels[t]);
        target->elements.push_back(x);
    }
    const auto [h1, h2] = cartan_pair(n);
    g.a = {h1, h2};
    g.z = ExactMatrix(n + 2, n + 2);
    g.z(0, 1) = QSqrt2(1);
    g.z(1, 0) = QSqrt2(-1);
    return g;
}

ExactMatrix iwasawa_complex_structure(std::size_t n, const QSqrt2& c) {
    const auto s = build_so2n_iwasawa(n, c);
    const auto g = build_so2n(n);
    const std::size_t k = s.elements.size();
    auto pi = [n](const ExactMatrix& x) { return (x - cartan_involution(x, n)) * QSqrt2::rational(1, 2); };
    std::vector<Vector<QSqrt2>> images;
    for (const auto& x : s.elements) images.push_back(pi(x).data());
    const ExactMatrix cols = ExactMatrix::from_columns(images, (n + 2) * (n + 2));
    ExactMatrix J(k, k);
    for (std::size_t t = 0; t < k; ++t) {
        const ExactMatrix p = pi(s.elements[t]);
        const ExactMatrix rotated = g.z * p - p * g.z;
        const auto coords = solve(cols, rotated.data());
        if (!coords) throw std::logic_error("ad(Z) o pi leaves pi(a + n)");
        J.set_column(t, *coords);
    }
    return J;
}

bool ad_z_squares_to_minus_one(const MatrixAlgebra& g) {
    for (const auto& x : g.p.elements) {
        const ExactMatrix once = g.z * x - x * g.z;
        const ExactMatrix twice = g.z * once - once * g.z;
        if (!(twice + x).is_zero(0.0)) return false;
    }
    return true;
}

// ---- hypersurface -----------------------------------------------------------

HypersurfaceData s_N_data(std::size_t n) {
    if (n < 2) throw std::invalid_argument("s_N needs n >= 2");
    const std::size_t m = n - 1;
    const QSqrt2 r2 = QSqrt2::sqrt2();
    HypersurfaceData out{build_solvable_model<QSqrt2>(QSqrt2(2) * r2, m), {}, {}, {}};
    const std::size_t d = 2 * m + 4;
    const QSqrt2 s = QSqrt2::rational(1, 2) * r2;  // 1/sqrt 2
    constexpr std::size_t A1 = 0, A2 = 1, X0 = 2;
    const std::size_t W0 = d - 1;

    auto vec = [&](std::initializer_list<std::pair<std::size_t, QSqrt2>> terms) {
        Vector<QSqrt2> v(d, QSqrt2(0));
        for (const auto& [k, x] : terms) v[k] += x;
        return v;
    };
    out.basis.push_back(vec({{X0, -s}, {W0, s}}));
    out.basis.push_back(vec({{X0, -s}, {W0, -s}}));
    out.basis.push_back(vec({{A1, -s}, {A2, s}}));
    out.labels = {"xi", "xi_perp", "T"};
    for (std::size_t i = 1; i <= m; ++i) {
        out.basis.push_back(unit_vector<QSqrt2>(d, 2 + i));
        out.labels.push_back("Y" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= m; ++i) {
        out.basis.push_back(unit_vector<QSqrt2>(d, 2 + m + i));
        out.labels.push_back("Z" + std::to_string(i));
    }
    out.normal = vec({{A1, -s}, {A2, -s}});
    return out;
}

ContactMetricAlgebra<QSqrt2> build_s_N(std::size_t n) {
    const auto data = s_N_data(n);
    return induced_hypersurface_structure(data.ambient, data.basis, data.labels, data.normal,
                                          "s_N-" + std::to_string(2 * n + 1));
}

ExactMatrix s_N_to_g02_map(std::size_t n) {
    if (n < 2) throw std::invalid_argument("s_N needs n >= 2");
    const std::size_t d = 2 * n + 1;
    // source: xi, xi_perp, T, Y1..Y_{n-1}, Z1..Z_{n-1}; target: xi, X1..Xn, Y1..Yn
    auto sY = [](std::size_t i) { return 2 + i; };
    auto sZ = [n](std::size_t i) { return 1 + n + i; };
    auto tX = [](std::size_t i) { return i; };
    auto tY = [n](std::size_t i) { return n + i; };
    ExactMatrix m(d, d);
    m(0, 0) = QSqrt2(1);
    m(tX(2), 1) = QSqrt2(1);
    m(tY(2), 2) = QSqrt2(1);
    m(tX(1), sZ(1)) = QSqrt2(-1);
    m(tY(1), sY(1)) = QSqrt2(1);
    for (std::size_t i = 2; i <= n - 1; ++i) {
        m(tX(i + 1), sZ(i)) = QSqrt2(-1);
        m(tY(i + 1), sY(i)) = QSqrt2(1);
    }
    return m;
}

const std::vector<CatalogFamily>& catalog_families() {
    static const std::vector<CatalogFamily> families{
        {"g-alpha-beta", "--alpha A --beta B --n N", "contact metric algebra g(alpha,beta), dimension 2N+1"},
        {"heisenberg", "--n N", "Heisenberg algebra with its Sasakian structure, dimension 2N+1"},
        {"solvable-model", "--c C --m M", "Kaehler solvable algebra s(C) with M pairs, dimension 2M+4"},
        {"s-N", "--n N", "hypersurface of s(2 r2) with induced contact metric structure, dimension 2N+1"},
        {"hyperbolic-plane", "", "2-dimensional algebra [A,X] = X"},
        {"abelian", "--dim D", "abelian algebra with flat metric"},
        {"so2n-iwasawa", "--n N --c C", "Iwasawa subalgebra of so(2,N) from matrices, with its model metric"},
    };
    return families;
}

#define KMU_INSTANTIATE_CATALOG(S)                                                            \
    template ContactMetricAlgebra<S> build_g_alpha_beta(const S&, const S&, std::size_t);    \
    template ContactMetricAlgebra<S> build_heisenberg(std::size_t);                          \
    template HermitianAlgebra<S> build_solvable_model(const S&, std::size_t);               \
    template Vector<S> solvable_model_mean_curvature(const S&, std::size_t);                \
    template MetricLieAlgebra<S> build_hyperbolic_plane();                                  \
    template MetricLieAlgebra<S> build_flat(std::size_t);

KMU_INSTANTIATE_CATALOG(QSqrt2)
KMU_INSTANTIATE_CATALOG(double)

}  // namespace kmu
