#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmu/field.hpp"

namespace kmu {

enum class Status { pass, fail, not_applicable, indeterminate };

std::string_view to_string(Status s);

/// A scalar as reported: the float value plus the exact string when the
/// backend is exact.
struct ReportScalar {
    std::string name;
    double value = 0.0;
    std::optional<std::string> exact;
};

template <Field S>
ReportScalar report_scalar(std::string name, const S& x) {
    ReportScalar r{std::move(name), to_double(x), std::nullopt};
    if constexpr (is_exact_v<S>) r.exact = scalar_string(x);
    return r;
}

struct CheckRecord {
    std::string name;
    Status status = Status::pass;
    std::vector<ReportScalar> scalars;
    std::string witness;  // empty when there is nothing to point at
    std::string note;
};

/// Ordered list of check records; fails iff any record failed.
struct VerificationReport {
    std::string subject;
    std::vector<CheckRecord> records;

    bool passed() const;
    CheckRecord& add(std::string name, Status status, std::string witness = {}, std::string note = {});
    CheckRecord& add(std::string name, bool ok, std::string witness = {}, std::string note = {}) {
        return add(std::move(name), ok ? Status::pass : Status::fail, std::move(witness), std::move(note));
    }
    const CheckRecord* find(std::string_view name) const;
    void append(const VerificationReport& other, std::string_view prefix = {});
};

}  // namespace kmu
