// Acceptance gate: every cross-validation criterion at its full declared
// grid, each with a wall-time budget.  One line per criterion; exit status 0
// only when every check of every criterion passes within budget.

#include <array>
#include <cstdio>
#include <string>

#include "speczeta/verify.hpp"

namespace {

// Wall-time budgets (seconds) per criterion, in order 1..13.
constexpr std::array<double, speczeta::kCriterionCount> kBudgetSeconds = {
    1, 5, 30, 5, 5, 30, 120, 120, 30, 60, 180, 300, 5,
};

}  // namespace

int main()
{
    const speczeta::VerifyOptions options;  // full grids, 1e7 MC samples, fixed seed
    bool all_pass = true;

    for (int number = 1; number <= speczeta::kCriterionCount; ++number) {
        const speczeta::CriterionReport report = speczeta::run_criterion(number, options);
        const double seconds     = report.elapsed_ms / 1000.0;
        const double budget      = kBudgetSeconds[static_cast<std::size_t>(number - 1)];
        const bool within_budget = seconds < budget;
        const bool pass          = report.all_pass && within_budget;
        all_pass                 = all_pass && pass;

        std::size_t failures = 0;
        for (const auto& entry : report.entries)
            if (!entry.pass)
                ++failures;

        std::printf("criterion %2d %-32s %s   %4zu checks   %7.2fs (budget %3.0fs)%s\n",
                    report.number, report.name.c_str(), pass ? "PASS" : "FAIL",
                    report.entries.size(), seconds, budget,
                    within_budget ? "" : "  OVER BUDGET");

        for (const auto& entry : report.entries) {
            if (entry.pass)
                continue;
            std::string params;
            for (const auto& [key, value] : entry.parameters)
                params += " " + key + "=" + value;
            std::printf("    FAIL %s%s\n         lhs = %s\n         rhs = %s\n",
                        entry.check_name.c_str(), params.c_str(), entry.lhs.c_str(),
                        entry.rhs.c_str());
        }
        std::fflush(stdout);
    }

    std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
