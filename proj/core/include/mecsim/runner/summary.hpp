#ifndef MECSIM_RUNNER_SUMMARY_HPP
#define MECSIM_RUNNER_SUMMARY_HPP

#include <map>
#include <vector>

#include "mecsim/descriptors/resource_vector.hpp"
#include "mecsim/runner/event_log.hpp"

namespace mecsim {

struct HostResourceSummary {
    ResourceVector budget;
    ResourceVector free;
    bool operator==(const HostResourceSummary&) const = default;
};

// Derived purely from log records, so summarize(log file) reproduces the
// summary returned by a live run field-for-field.
struct RunSummary {
    uint64_t eventCount = 0;
    std::map<std::string, HostResourceSummary> perHost;
    // contextId -> lifecycle state -> timestamp of entering that state
    std::map<std::string, std::map<std::string, double>> perContext;
    std::vector<double> alertLatencies;

    bool operator==(const RunSummary&) const = default;
    nlohmann::ordered_json toJson() const;
};

RunSummary summarizeRecords(const std::vector<EventRecord>& records);

// Reads a JSONL log and recomputes the summary. Throws CorruptLog.
RunSummary summarizeLog(const std::string& logPath);

} // namespace mecsim

#endif
