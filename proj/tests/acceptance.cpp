// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "catalog_sample.hpp"
#include "kmu/algebra.hpp"
#include "kmu/catalog.hpp"
#include "kmu/contact.hpp"
#include "kmu/riemannian.hpp"
#include "kmu/soliton.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using kmu::QSqrt2;

namespace {

// Pinned tolerances.
constexpr double kClosedFormTol = 1e-9;     // float (kappa, mu) against the closed form
constexpr double kSectionalTol = 1e-9;      // sec(A2, W0)
constexpr double kMinSecBelow = 1e-6;       // sampled minimum may undershoot -8 by this much
constexpr double kMinSecAbove = 1e-3;       // and overshoot by this much
constexpr double kSolitonConstTol = 1e-9;   // reduced vs ambient soliton constant
constexpr double kOracleTol = 1e-10;        // float oracles on exact inputs

constexpr std::uint64_t kClosedFormSeed = 20240917;
constexpr std::uint64_t kMinSecSeed = 4242;
constexpr std::size_t kMinSecSamples = 10000;
constexpr std::size_t kMinSecRefine = 50;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (pass) detail.str("");
        if (pass) detail << why;
        pass = false;
    }
};

kmu::Vector<QSqrt2> t_vector(std::size_t dim) {
    const QSqrt2 s = QSqrt2::rational(1, 2) * QSqrt2::sqrt2();
    kmu::Vector<QSqrt2> v(dim, QSqrt2(0));
    v[0] = -s;
    v[1] = s;
    return v;
}

void g02_nullity(Outcome& o) {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto cm = kmu::build_g_alpha_beta<QSqrt2>(QSqrt2(0), QSqrt2(2), n);
        const auto fit = kmu::kappa_mu_fit(cm);
        if (!(fit.kappa == QSqrt2(0) && fit.mu && *fit.mu == QSqrt2(4) && fit.residual.is_zero()))
            return o.fail("n=" + std::to_string(n) + " fit (" + fit.kappa.to_string() + ", " +
                          (fit.mu ? fit.mu->to_string() : "none") + ")");
        if (oracle::kappa_mu_defect(oracle::tables(cm.metric), oracle::contact_data(cm), 0, 4) > kOracleTol)
            return o.fail("oracle rejects (0,4) at n=" + std::to_string(n));
    }
    o.detail << "n=2..5: (kappa,mu)=(0,4), residual 0";
}

void closed_forms(Outcome& o) {
    std::mt19937_64 rng(kClosedFormSeed);
    std::uniform_real_distribution<double> alpha(0.0, 2.0), gap(0.1, 2.0);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const double a = alpha(rng), b = a + gap(rng);
        const auto cm = kmu::build_g_alpha_beta<double>(a, b, 2 + static_cast<std::size_t>(t % 3));
        const auto fit = kmu::kappa_mu_fit(cm);
        const auto [k, m] = kmu::closed_form_kappa_mu(a, b);
        if (!fit.mu) return o.fail("mu undetermined");
        worst = std::max({worst, std::abs(fit.kappa - k), std::abs(*fit.mu - m)});
    }
    if (worst > kClosedFormTol) return o.fail("max deviation " + std::to_string(worst));
    o.detail << "20 seeded pairs, max deviation " << worst << " <= " << kClosedFormTol;
}

void solvable_model(Outcome& o) {
    std::string lambdas;
    for (const QSqrt2& c : {QSqrt2(1), QSqrt2(0, 2)})
        for (std::size_t m = 1; m <= 3; ++m) {
            const auto h = kmu::build_solvable_model(c, m);
            const std::string tag = "c=" + c.to_string() + " m=" + std::to_string(m);
            if (!kmu::validate_jacobi(h.metric.algebra()).passed()) return o.fail(tag + " Jacobi");
            const auto e = kmu::einstein_check(h.metric);
            if (!e.einstein || !(e.lambda < QSqrt2(0))) return o.fail(tag + " not negative Einstein");
            const auto k = kmu::validate_kahler(h);
            for (const char* rec : {"J_squared", "J_orthogonal", "J_parallel"})
                if (k.find(rec) == nullptr || k.find(rec)->status != kmu::Status::pass) return o.fail(tag + " " + rec);
            lambdas += (lambdas.empty() ? "" : " ") + e.lambda.to_string();
        }
    o.detail << "Jacobi, Einstein, J^2=-I, J orthogonal, DJ=0 exact; lambda = " << lambdas;
}

void matrix_cross_check(Outcome& o) {
    for (std::size_t n = 3; n <= 5; ++n)
        for (const QSqrt2& c : {QSqrt2(0, 1), QSqrt2(0, 2)}) {
            const auto basis = kmu::build_so2n_iwasawa(n, c);
            const auto alg = kmu::matrix_structure_constants(basis, "iwasawa");
            const auto model = kmu::build_solvable_model(c, n - 2).metric.algebra();
            const std::string tag = "n=" + std::to_string(n) + " c=" + c.to_string();
            if (alg.dim() != model.dim()) return o.fail(tag + " dimension");
            for (std::size_t i = 0; i < alg.dim(); ++i)
                for (std::size_t j = 0; j < alg.dim(); ++j)
                    if (!(alg.structure(i, j) == model.structure(i, j)))
                        return o.fail(tag + " bracket [" + alg.labels()[i] + "," + alg.labels()[j] + "]");
            if (!(kmu::iwasawa_model_gram(basis, c) == kmu::ExactMatrix::identity(alg.dim())))
                return o.fail(tag + " basis not orthonormal");
        }
    o.detail << "n=3,4,5 and c=r2,2*r2: brackets equal, basis orthonormal";
}

void root_spaces(Outcome& o) {
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto rd = kmu::root_space_decomposition(n);
        std::vector<std::size_t> dims;
        for (const auto& r : rd.positive) dims.push_back(r.dim);
        std::sort(dims.begin(), dims.end());
        if (dims != std::vector<std::size_t>{1, 1, n - 2, n - 2} || rd.roots.size() != 8 || !rd.complete())
            return o.fail("n=" + std::to_string(n));
    }
    o.detail << "n=3..6: dims (1, n-2, n-2, 1), |Sigma| = 8";
}

void minimal_curvature(Outcome& o) {
    const auto s = kmu::build_solvable_model<QSqrt2>(QSqrt2(0, 2), 2).metric;
    const auto& alg = s.algebra();
    const QSqrt2 sec = kmu::sectional_curvature(s, kmu::unit_vector<QSqrt2>(s.dim(), *alg.index_of("A2")),
                                                kmu::unit_vector<QSqrt2>(s.dim(), *alg.index_of("W0")));
    if (std::abs(sec.to_double() + 8.0) > kSectionalTol) return o.fail("sec(A2,W0) = " + sec.to_string());
    const auto best = kmu::min_sectional_sampled(s, kMinSecSamples, kMinSecSeed, kMinSecRefine);
    char buf[160];
    std::snprintf(buf, sizeof buf, "sec(A2,W0) = %s; sampled minimum %.12f (10^4 planes, seed %llu, 50 steps)",
                  sec.to_string().c_str(), best.value, static_cast<unsigned long long>(kMinSecSeed));
    if (best.value < -8.0 - kMinSecBelow || best.value > -8.0 + kMinSecAbove) return o.fail(buf);
    o.detail << buf;
}

void s_N_contact(Outcome& o) {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto cm = kmu::build_s_N(n);
        if (!kmu::validate_structure(cm).passed()) return o.fail("structure n=" + std::to_string(n));
        const auto fit = kmu::kappa_mu_fit(cm);
        if (!(fit.kappa == QSqrt2(0) && fit.mu && *fit.mu == QSqrt2(4) && fit.residual.is_zero()))
            return o.fail("fit n=" + std::to_string(n));
    }
    o.detail << "n=2,3,4: contact metric axioms exact, (kappa,mu)=(0,4)";
}

void s_N_soliton(Outcome& o) {
    std::string cs;
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto s = kmu::build_s_N(n).metric;
        const std::string tag = "n=" + std::to_string(n);
        if (kmu::einstein_check(s).einstein) return o.fail(tag + " unexpectedly Einstein");
        const auto v = kmu::algebraic_soliton_solve(s);
        if (!v.nontrivial() || !(v.c < QSqrt2(0)) || !v.derivation_residual.is_zero() ||
            !v.decomposition_residual.is_zero())
            return o.fail(tag + " soliton verdict " + std::string(kmu::to_string(v.status)));
        if (!kmu::lauret_conditions<QSqrt2>(s, v.c).all_pass()) return o.fail(tag + " Lauret conditions");
        if (v.label != kmu::SolitonLabel::expanding) return o.fail(tag + " label");
        cs += (cs.empty() ? "" : " ") + v.c.to_string();
    }
    o.detail << "n=2,3,4: nontrivial solvsoliton, expanding, residuals 0, four conditions pass; c = " << cs;
}

void heber(Outcome& o) {
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto s = kmu::build_solvable_model<QSqrt2>(QSqrt2(0, 2), m).metric;
        const std::string tag = "m=" + std::to_string(m);
        const auto lambda = kmu::algebraic_soliton_solve(s).c;
        const auto h = kmu::rank_reduction(s, {kmu::mean_curvature_vector(s)});
        if (!h.heber || !*h.heber || !h.einstein.einstein) return o.fail(tag + " a'=H0");
        const auto t = kmu::rank_reduction(s, {t_vector(s.dim())});
        if (!t.heber || *t.heber || t.einstein.einstein) return o.fail(tag + " a'=T");
        if (!t.soliton.is_soliton() || std::abs((t.soliton.c - lambda).to_double()) > kSolitonConstTol)
            return o.fail(tag + " soliton constant " + t.soliton.c.to_string());
    }
    o.detail << "m=1,2,3: H0 -> criterion true, Einstein; T -> criterion false, not Einstein, constant kept";
}

void isomorphism(Outcome& o) {
    std::size_t rejected = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto src = kmu::build_s_N(n);
        const auto dst = kmu::build_g_alpha_beta<QSqrt2>(QSqrt2(0), QSqrt2(2), n);
        const auto f = kmu::s_N_to_g02_map(n);
        if (!kmu::check_structure_isomorphism(src, dst, f).passed()) return o.fail("n=" + std::to_string(n));
        for (std::size_t r = 0; r < f.rows(); ++r)
            for (std::size_t c = 0; c < f.cols(); ++c) {
                auto g = f;
                g(r, c) += QSqrt2(1);
                const auto rep = kmu::check_structure_isomorphism(src, dst, g);
                const bool witnessed = std::any_of(rep.records.begin(), rep.records.end(), [](const auto& rec) {
                    return rec.status == kmu::Status::fail && !rec.witness.empty();
                });
                if (rep.passed() || !witnessed)
                    return o.fail("perturbation (" + std::to_string(r) + "," + std::to_string(c) + ") accepted");
                ++rejected;
            }
    }
    o.detail << "n=2..5 exact; " << rejected << " single-entry perturbations rejected with witnesses";
}

void deformation(Outcome& o) {
    const auto cm = kmu::build_g_alpha_beta<QSqrt2>(QSqrt2(0), QSqrt2(2), 2);
    std::string fits;
    for (const QSqrt2& a : {QSqrt2(2), QSqrt2::rational(1, 2), QSqrt2(3)}) {
        const auto d = kmu::d_homothetic(cm, a);
        if (!kmu::validate_structure(d).passed()) return o.fail("a=" + a.to_string() + " revalidation");
        const auto fit = kmu::kappa_mu_fit(d);
        const auto [k, m] = kmu::d_homothetic_kappa_mu(QSqrt2(0), QSqrt2(4), a);
        if (!fit.mu || !(fit.kappa == k) || !(*fit.mu == m)) return o.fail("a=" + a.to_string() + " fit");
        fits += " a=" + a.to_string() + "->(" + k.to_string() + "," + m.to_string() + ")";
    }
    const auto two = kmu::kappa_mu_fit(kmu::d_homothetic(cm, QSqrt2(2)));
    if (!(two.kappa == QSqrt2::rational(3, 4) && *two.mu == QSqrt2(3))) return o.fail("a=2 is not (3/4, 3)");
    o.detail << "exact match:" << fits;
}

void geometry_properties(Outcome& o) {
    std::size_t count = 0;
    double worst_float = 0.0;
    for (const auto& m : sample::exact_catalog()) {
        if (!props::geometry_residuals(m).ok<QSqrt2>()) return o.fail(m.name());
        ++count;
    }
    for (const auto& m : sample::random_solvable(10)) {
        if (!props::geometry_residuals(m).ok<QSqrt2>()) return o.fail(m.name());
        ++count;
    }
    for (const auto& m : sample::float_catalog()) {
        const auto r = props::geometry_residuals(m);
        worst_float = std::max(worst_float, r.worst);
        if (!r.ok<double>()) return o.fail(m.name() + " " + r.worst_identity);
        ++count;
    }
    o.detail << count << " algebras (catalog + 10 random solvable): exact zeros; float max residual " << worst_float
             << " <= " << props::kFloatTol;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"(kappa,mu) of g(0,2)", g02_nullity},
        {"closed-form (kappa,mu) of g(alpha,beta)", closed_forms},
        {"solvable model is Einstein and Kaehler", solvable_model},
        {"matrix Iwasawa algebra matches the model", matrix_cross_check},
        {"restricted root spaces", root_spaces},
        {"minimal sectional curvature", minimal_curvature},
        {"s_N contact structure and nullity", s_N_contact},
        {"s_N is an expanding solvsoliton", s_N_soliton},
        {"mean curvature criterion vs direct check", heber},
        {"s_N isomorphic to g(0,2)", isomorphism},
        {"D-homothetic deformation", deformation},
        {"curvature identities", geometry_properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.detail.str().c_str());
        if (!o.pass) ++failures;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
