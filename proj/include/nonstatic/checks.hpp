#pragma once

// Invariant and acceptance checks with their pinned tolerances. Failures are
// reported, never thrown.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nonstatic::checks {

enum class Level { Fast, Full };

struct CheckResult {
    std::string id;    // "AC01".."AC15" for acceptance criteria, "P.*" for properties
    std::string name;
    bool passed = false;
    double measured = 0.0;  // worst observed value of the checked quantity
    double limit = 0.0;     // threshold it is compared against
    std::string detail;
};

struct Report {
    std::vector<CheckResult> results;
    double seconds = 0.0;

    bool all_passed() const;
};

/// The fifteen acceptance criteria. Fast shrinks grids (fewer oracle times,
/// fewer sampled instants); tolerances are identical at both levels.
std::vector<CheckResult> acceptance_criteria(Level level);

/// A single acceptance criterion by id ("AC01".."AC15"); nullopt if unknown.
std::optional<CheckResult> acceptance_criterion(std::string_view id, Level level);

/// Per-module invariants beyond the acceptance list.
std::vector<CheckResult> module_properties(Level level);

/// Both of the above, timed.
Report run_checks(Level level);

/// One line per result plus a closing tally.
std::string format_report(const Report& report);
std::string format_result(const CheckResult& result);

}  // namespace nonstatic::checks
