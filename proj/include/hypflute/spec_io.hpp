#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hypflute/dynamics.hpp"
#include "hypflute/selection.hpp"

namespace hypflute {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSpecSchema = "hypflute-spec-1";
inline constexpr const char* kReportSchema = "hypflute-report-1";

struct SpecFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Group spec <-> JSON ("hypflute-spec-1"). Serialization is deterministic:
// fixed field order, no timestamps, shortest round-trip doubles.
ordered_json spec_to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const ordered_json& j);

std::string save_spec(const GroupSpec& spec); // serialized text
void save_spec_file(const GroupSpec& spec, const std::string& path);
GroupSpec load_spec_file(const std::string& path);

// Structural consistency of a loaded spec: matrix and bisectors must
// regenerate from (q, n); throws SpecFormatError on mismatch.
void validate_spec(const GroupSpec& spec, double tol = 1e-9);

// Report payloads ("hypflute-report-1").
ordered_json report_json(const PingPongReport& r);
ordered_json report_json(const InjectivityCheck& r);
ordered_json report_json(const WitnessReport& r);
ordered_json report_json(const InjProfile& p, double estimate, const std::string& verdict);
ordered_json report_json(const StepTwoRecord& r);
ordered_json report_json(const DefectReport& r);

} // namespace hypflute
