#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace speczeta {

// One line of a verification report: a single cross-route check with its
// parameters and both sides rendered exactly.
struct ReportEntry {
    std::string check_name;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    double elapsed_ms = 0.0;
};

// Grid caps for the verification sweep.  A zero max_n / max_modulus means
// "use each criterion's own declared grid"; nonzero values clamp the grids
// (useful for quick smoke runs from the command line).
struct VerifyOptions {
    unsigned max_n = 0;
    unsigned long max_modulus = 0;
    unsigned long mc_samples = 10000000;
    std::uint64_t seed = 0x243F6A8885A308D3ull;
};

// One acceptance criterion: its checks, overall verdict, and wall time.
struct CriterionReport {
    int number = 0;
    std::string name;
    std::vector<ReportEntry> entries;
    bool all_pass = false;
    double elapsed_ms = 0.0;
};

inline constexpr int kCriterionCount = 13;

// Runs acceptance criterion `number` (1-based) at its declared grid, clamped
// by the options.
CriterionReport run_criterion(int number, const VerifyOptions& options);

// All criteria in order.
std::vector<CriterionReport> run_all_criteria(const VerifyOptions& options);

}  // namespace speczeta
