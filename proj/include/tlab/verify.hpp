#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace tlab {

// One line of the verification report. The anchor names the identity or
// property being checked.
struct VerificationRecord {
    std::string name;
    std::string anchor;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string details;
    double runtime_ms = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    int word_bound = 8;
    double tol = 1e-10;
};

// Known selections: identities, questionmark, thurston, centralizer, cuntz,
// pair, spectral, io, all.
std::vector<VerificationRecord> run_suite(const std::string& selection,
                                          const SuiteOptions& options = {});

bool all_passed(const std::vector<VerificationRecord>& records);

// Deterministic JSON (sorted keys, versioned schema).
nlohmann::json report_to_json(const std::vector<VerificationRecord>& records);

// Serializes the report to path; throws on I/O failure.
void export_report(const std::vector<VerificationRecord>& records, const std::string& path);

}  // namespace tlab
