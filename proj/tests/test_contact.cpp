#include <doctest.h>

#include "kmu/catalog.hpp"
#include "kmu/contact.hpp"
#include "oracles.hpp"

using kmu::QSqrt2;

namespace {

template <class S>
double oracle_fit_defect(const kmu::ContactMetricAlgebra<S>& cm, double kappa, double mu) {
    return oracle::kappa_mu_defect(oracle::tables(cm.metric), oracle::contact_data(cm), kappa, mu);
}

}  // namespace

TEST_CASE("g(alpha,beta) is contact metric, also outside the nullity range") {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 2}, {1, 3}, {0, 1}, {2, 1}, {-1, 1}}) {
        for (std::size_t n = 2; n <= 3; ++n) {
            const auto cm = kmu::build_g_alpha_beta<QSqrt2>(QSqrt2(a), QSqrt2(b), n);
            CAPTURE(cm.name());
            CHECK(cm.dim() == 2 * n + 1);
            CHECK(kmu::validate_structure(cm).passed());
            CHECK(oracle::contact_condition_defect(oracle::tables(cm.metric), oracle::contact_data(cm)) == 0.0);
        }
    }
}

TEST_CASE("g(0,2) is a (0,4)-space") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto cm = kmu::build_g_alpha_beta<QSqrt2>(QSqrt2(0), QSqrt2(2), n);
        const auto fit = kmu::kappa_mu_fit(cm);
        CHECK(fit.is_kappa_mu);
        CHECK(fit.kappa == QSqrt2(0));
        REQUIRE(fit.mu.has_value());
        CHECK(*fit.mu == QSqrt2(4));
        CHECK(fit.residual.is_zero());
        CHECK(oracle_fit_defect(cm, 0.0, 4.0) < 1e-12);
    }
}

TEST_CASE("rational (alpha, beta) give the closed-form (kappa, mu) exactly") {
    const std::vector<std::pair<QSqrt2, QSqrt2>> params{{QSqrt2::rational(1, 2), QSqrt2::rational(3, 2)},
                                                         {QSqrt2(1), QSqrt2(3)},
                                                         {QSqrt2(0), QSqrt2(1)},
                                                         {QSqrt2(0), QSqrt2(0, 1)}};
    for (const auto& [a, b] : params) {
        const auto cm = kmu::build_g_alpha_beta(a, b, 2);
        const auto fit = kmu::kappa_mu_fit(cm);
        const auto [k, m] = kmu::closed_form_kappa_mu(a, b);
        CHECK(fit.kappa == k);
        REQUIRE(fit.mu.has_value());
        CHECK(*fit.mu == m);
        CHECK(oracle_fit_defect(cm, k.to_double(), m.to_double()) < 1e-12);
    }
    CHECK_THROWS(kmu::closed_form_kappa_mu(QSqrt2(2), QSqrt2(1)));
}

TEST_CASE("Heisenberg is Sasakian with undetermined mu") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto cm = kmu::build_heisenberg<QSqrt2>(n);
        CHECK(kmu::validate_structure(cm).passed());
        CHECK(kmu::h_tensor(cm) == kmu::Matrix<QSqrt2>(cm.dim(), cm.dim()));
        const auto fit = kmu::kappa_mu_fit(cm);
        CHECK(fit.is_kappa_mu);
        CHECK(fit.kappa == QSqrt2(1));
        CHECK_FALSE(fit.mu.has_value());
        const auto* rec = fit.report.find("mu_determined");
        REQUIRE(rec != nullptr);
        CHECK(rec->status == kmu::Status::indeterminate);
    }
}

TEST_CASE("h tensor agrees with the oracle") {
    const auto cm = kmu::build_g_alpha_beta<QSqrt2>(QSqrt2(1), QSqrt2(3), 2);
    const auto t = oracle::tables(cm.metric);
    CHECK((oracle::to_eigen(kmu::h_tensor(cm)) - oracle::h_tensor(t, oracle::contact_data(cm))).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("broken structure is reported") {
    auto cm = kmu::build_g_alpha_beta<QSqrt2>(QSqrt2(0), QSqrt2(2), 2);
    cm.structure.phi = QSqrt2(2) * cm.structure.phi;
    const auto rep = kmu::validate_structure(cm);
    CHECK_FALSE(rep.passed());
    REQUIRE(rep.find("phi_squared") != nullptr);
    CHECK(rep.find("phi_squared")->status == kmu::Status::fail);
}

TEST_CASE("D-homothetic deformation of g(0,2)") {
    const auto cm = kmu::build_g_alpha_beta<QSqrt2>(QSqrt2(0), QSqrt2(2), 2);
    for (const QSqrt2& a : {QSqrt2(2), QSqrt2::rational(1, 2), QSqrt2(3)}) {
        const auto d = kmu::d_homothetic(cm, a);
        CHECK(kmu::validate_structure(d).passed());
        const auto fit = kmu::kappa_mu_fit(d);
        const auto [k, m] = kmu::d_homothetic_kappa_mu(QSqrt2(0), QSqrt2(4), a);
        CHECK(fit.kappa == k);
        REQUIRE(fit.mu.has_value());
        CHECK(*fit.mu == m);
        CHECK(oracle_fit_defect(d, k.to_double(), m.to_double()) < 1e-12);
    }
    const auto two = kmu::kappa_mu_fit(kmu::d_homothetic(cm, QSqrt2(2)));
    CHECK(two.kappa == QSqrt2::rational(3, 4));
    CHECK(*two.mu == QSqrt2(3));
    CHECK_THROWS_AS(kmu::d_homothetic(cm, QSqrt2(0)), std::invalid_argument);
    CHECK_THROWS_AS(kmu::d_homothetic(cm, QSqrt2(-1)), std::invalid_argument);
}

TEST_CASE("solvable model is Kaehler") {
    for (const QSqrt2& c : {QSqrt2(1), QSqrt2(0, 2)})
        for (std::size_t m = 1; m <= 3; ++m) CHECK(kmu::validate_kahler(kmu::build_solvable_model(c, m)).passed());
    auto h = kmu::build_solvable_model<QSqrt2>(QSqrt2(1), 1);
    h.J = -kmu::Matrix<QSqrt2>::identity(h.metric.dim());
    CHECK_FALSE(kmu::validate_kahler(h).passed());
}

TEST_CASE("s_N carries a (0,4) contact metric structure") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto cm = kmu::build_s_N(n);
        CHECK(cm.dim() == 2 * n + 1);
        CHECK(kmu::validate_structure(cm).passed());
        const auto fit = kmu::kappa_mu_fit(cm);
        CHECK(fit.kappa == QSqrt2(0));
        CHECK(*fit.mu == QSqrt2(4));
        CHECK(oracle::contact_condition_defect(oracle::tables(cm.metric), oracle::contact_data(cm)) < 1e-12);
    }
}

TEST_CASE("induced xi is -J N") {
    const auto data = kmu::s_N_data(3);
    const auto cm = kmu::build_s_N(3);
    const auto jn = data.ambient.J * data.normal;
    // xi is the first hypersurface basis vector; check in ambient coordinates.
    kmu::Vector<QSqrt2> xi_amb(data.normal.size(), QSqrt2(0));
    for (std::size_t k = 0; k < cm.dim(); ++k) kmu::axpy(cm.structure.xi[k], data.basis[k], xi_amb);
    CHECK(xi_amb == -jn);
}

TEST_CASE("s_N is isomorphic to g(0,2)") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto src = kmu::build_s_N(n);
        const auto dst = kmu::build_g_alpha_beta<QSqrt2>(QSqrt2(0), QSqrt2(2), n);
        const auto f = kmu::s_N_to_g02_map(n);
        CHECK(kmu::check_structure_isomorphism(src, dst, f).passed());
        const auto ts = oracle::tables(src.metric), td = oracle::tables(dst.metric);
        const auto fe = oracle::to_eigen(f);
        CHECK(oracle::homomorphism_defect(ts, td, fe) == 0.0);
        CHECK(oracle::isometry_defect(ts, td, fe) == 0.0);
        CHECK((fe * oracle::contact_data(src).phi - oracle::contact_data(dst).phi * fe).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("every single-entry perturbation of the isomorphism is rejected") {
    const std::size_t n = 2;
    const auto src = kmu::build_s_N(n);
    const auto dst = kmu::build_g_alpha_beta<QSqrt2>(QSqrt2(0), QSqrt2(2), n);
    const auto f = kmu::s_N_to_g02_map(n);
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) {
            auto g = f;
            g(r, c) += QSqrt2(1);
            const auto rep = kmu::check_structure_isomorphism(src, dst, g);
            CHECK_FALSE(rep.passed());
            bool witnessed = false;
            for (const auto& rec : rep.records)
                if (rec.status == kmu::Status::fail && !rec.witness.empty()) witnessed = true;
            CHECK(witnessed);
        }
}
