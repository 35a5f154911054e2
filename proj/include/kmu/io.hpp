#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "kmu/contact.hpp"
#include "kmu/metric.hpp"

namespace kmu {

/// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Algebra file contents: metric Lie algebra plus optional contact and
/// complex structures.
///
/// Format (0-based indices, unknown keys rejected):
///   { "name": str, "field": "exact-sqrt2" | "float64", "dim": int,
///     "basis": [labels], "brackets": [{"i": int, "j": int, "terms": [{"k": int, "value": v}]}],
///     "metric": "orthonormal" | [[v]],
///     "contact": {"xi": [v], "eta": [v], "phi": [[v]]},   (optional; phi[r][c] = component r of phi(e_c))
///     "complex": {"J": [[v]]} }                             (optional)
/// Exact values are strings such as "3", "-1/2", "r2", "1/2-3/4*r2" (integers
/// are accepted too); float values are JSON numbers.
template <Field S>
struct AlgebraDocument {
    MetricLieAlgebra<S> metric;
    std::optional<AlmostContactStructure<S>> contact;
    std::optional<Matrix<S>> complex;

    ContactMetricAlgebra<S> contact_algebra() const;
    HermitianAlgebra<S> hermitian_algebra() const;
};

using AnyDocument = std::variant<AlgebraDocument<QSqrt2>, AlgebraDocument<double>>;

AnyDocument parse_document(const nlohmann::json& j);
AnyDocument load_document(const std::filesystem::path& path);

template <Field S>
nlohmann::json to_json(const AlgebraDocument<S>& doc);

template <Field S>
AlgebraDocument<S> make_document(const MetricLieAlgebra<S>& m) {
    return {m, std::nullopt, std::nullopt};
}
template <Field S>
AlgebraDocument<S> make_document(const ContactMetricAlgebra<S>& cm) {
    return {cm.metric, cm.structure, std::nullopt};
}
template <Field S>
AlgebraDocument<S> make_document(const HermitianAlgebra<S>& h) {
    return {h.metric, std::nullopt, h.J};
}

template <Field S>
S parse_scalar(const nlohmann::json& v);
template <Field S>
nlohmann::json scalar_json(const S& x);

/// rows x cols matrix from nested arrays; throws InputError on shape or value errors.
template <Field S>
Matrix<S> parse_matrix(const nlohmann::json& j, std::size_t rows, std::size_t cols, const std::string& what);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace kmu
