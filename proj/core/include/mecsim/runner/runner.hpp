#ifndef MECSIM_RUNNER_RUNNER_HPP
#define MECSIM_RUNNER_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "mecsim/kernel/sim.hpp"
#include "mecsim/runner/summary.hpp"

namespace mecsim {

struct RunOptions {
    ClockMode mode = ClockMode::Virtual;
    double until = 60.0;
    std::optional<uint64_t> seed; // overrides the scenario's seed
    std::string logPath;          // empty: keep records in memory only
};

// Loads, builds and executes a scenario end to end. Throws ModeMismatch when
// the scenario declares bridges but mode is virtual; parse errors propagate.
RunSummary runScenario(const std::string& scenarioPath, const RunOptions& options);

struct Diagnostic {
    std::string location; // error code or config path
    std::string message;
};

// Non-throwing validation; empty list iff the scenario is runnable.
std::vector<Diagnostic> validateScenario(const std::string& scenarioPath);

} // namespace mecsim

#endif
