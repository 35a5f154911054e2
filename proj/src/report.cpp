#include "kmu/report.hpp"

#include <algorithm>

namespace kmu {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::not_applicable: return "not-applicable";
        case Status::indeterminate: return "indeterminate";
    }
    return "fail";
}

bool VerificationReport::passed() const {
    return std::none_of(records.begin(), records.end(),
                        [](const CheckRecord& r) { return r.status == Status::fail; });
}

CheckRecord& VerificationReport::add(std::string name, Status status, std::string witness, std::string note) {
    records.push_back(CheckRecord{std::move(name), status, {}, std::move(witness), std::move(note)});
    return records.back();
}

const CheckRecord* VerificationReport::find(std::string_view name) const {
    for (const auto& r : records)
        if (r.name == name) return &r;
    return nullptr;
}

void VerificationReport::append(const VerificationReport& other, std::string_view prefix) {
    for (auto r : other.records) {
        if (!prefix.empty()) r.name = std::string(prefix) + "." + r.name;
        records.push_back(std::move(r));
    }
}

}  // namespace kmu
