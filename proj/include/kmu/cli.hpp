#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kmu/metric.hpp"
#include "kmu/report.hpp"

namespace kmu::cli {

inline constexpr std::string_view kToolName = "kmu";
inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { ok = 0, check_failed = 1, input_error = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Report document for the given records.
struct ReportContext {
    std::string command;
    std::vector<std::string> inputs;  // file paths hashed into input_digest
    bool timestamp = true;
    double wall_time_ms = 0.0;
};

nlohmann::json report_json(const VerificationReport& report, const ReportContext& ctx);

/// Lowercase hex SHA-256 of the concatenated file contents.
std::string sha256_files(const std::vector<std::string>& paths);

/// Comma-separated linear combinations of basis labels, e.g. "T" or
/// "A1+2*A2,1/2*r2*X0". Coefficients are exact scalars; a coefficient
/// containing '+' or '-' must be parenthesized, e.g. "(1-r2)*A1". The label
/// H0 denotes the mean curvature vector unless the algebra has a basis
/// vector of that name. Throws std::invalid_argument on malformed input.
template <Field S>
std::vector<Vector<S>> parse_combinations(const MetricLieAlgebra<S>& m, std::string_view text);

}  // namespace kmu::cli
