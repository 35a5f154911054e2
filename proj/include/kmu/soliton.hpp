#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmu/metric.hpp"
#include "kmu/report.hpp"

namespace kmu {

template <Field S>
struct EinsteinResult {
    bool einstein = false;
    /// Ric = lambda I when einstein; otherwise scal / dim.
    S lambda{};
    S residual{};  // max-norm of Ric - (scal/dim) I
    VerificationReport report;
};

template <Field S>
EinsteinResult<S> einstein_check(const MetricLieAlgebra<S>& m);

enum class SolitonStatus { einstein, nontrivial_solvsoliton, none_found };
enum class SolitonLabel { expanding, steady, shrinking, none };
std::string_view to_string(SolitonStatus s);
std::string_view to_string(SolitonLabel l);

/// Algebraic Ricci soliton: Ric = c I + D with D a derivation.
template <Field S>
struct SolitonVerdict {
    SolitonStatus status = SolitonStatus::none_found;
    S c{};
    Matrix<S> derivation;         // D = Ric - c I
    S derivation_residual{};      // leibniz_defect(D)
    S decomposition_residual{};   // max-norm of Ric - c I - D' with D' the projection of D onto Der(g)
    SolitonLabel label = SolitonLabel::none;  // sign of c, for nontrivial solitons
    VerificationReport report;

    bool is_soliton() const { return status != SolitonStatus::none_found; }
    bool nontrivial() const { return status == SolitonStatus::nontrivial_solvsoliton; }
};

/// Since D = Ric - c I is forced, the solve reduces to the Leibniz system of
/// Ric - c I in the single unknown c (unique when [g, g] != 0; c = 0 is taken
/// for abelian g). D is then located in the span of derivation_space as an
/// independent check. With `fixed_c` only that constant is tested.
/// Tolerances: exact zero, or 1e-8 relative to |Ric| in float.
template <Field S>
SolitonVerdict<S> algebraic_soliton_solve(const MetricLieAlgebra<S>& m, std::optional<S> fixed_c = std::nullopt);

/// Conditions for s = a + n (n the nilradical, a its orthogonal complement)
/// to be an algebraic soliton with constant c:
///   (1) n with the restricted metric is a nilsoliton, Ric_n = c I + D_n,
///   (2) [a, a] = 0,
///   (3) [ad A, (ad A)^t] = 0 on n,
///   (4) <A, A> = -(1/c) tr S(ad A)^2 on n, S the symmetric part.
/// (3) and (4) are quadratic in A and are checked on the a-basis and all
/// pairwise sums, which determines them by polarization.
template <Field S>
struct LauretReport {
    S c{};
    std::size_t nilradical_dim = 0;
    VerificationReport report;
    bool all_pass() const { return report.passed(); }
};

/// Without `c` the ambient soliton constant is used. Throws
/// std::invalid_argument for non-solvable input or c >= 0.
template <Field S>
LauretReport<S> lauret_conditions(const MetricLieAlgebra<S>& m, std::optional<S> c = std::nullopt);

template <Field S>
struct RankReduction {
    MetricLieAlgebra<S> sub;
    std::vector<Vector<S>> sub_basis;  // ambient coordinates
    EinsteinResult<S> einstein;
    SolitonVerdict<S> soliton;
    /// For an Einstein Iwasawa-type ambient: the reduction is Einstein iff H0 lies in a'.
    std::optional<bool> heber;
    Vector<S> mean_curvature;  // H0 of the ambient algebra
    std::string note;
};

/// s' = a' + n (n the nilradical) with the restricted metric. a' is given by
/// nonzero spanning vectors inside a = n^perp; throws std::invalid_argument
/// otherwise. `heber` is set only when the ambient metric is Einstein and of
/// Iwasawa type.
template <Field S>
RankReduction<S> rank_reduction(const MetricLieAlgebra<S>& m, const std::vector<Vector<S>>& a_prime);

}  // namespace kmu
