#ifndef MECSIM_RUNNER_EVENT_LOG_HPP
#define MECSIM_RUNNER_EVENT_LOG_HPP

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mecsim/errors.hpp"

namespace mecsim {

// One structured observability record; serialized as one JSON object per
// line, fields in fixed order so identical runs produce identical bytes.
struct EventRecord {
    double t = 0;
    std::string node;
    std::string kind;
    nlohmann::ordered_json attrs;

    nlohmann::ordered_json toJson() const {
        return {{"t", t}, {"node", node}, {"kind", kind}, {"attrs", attrs}};
    }
    static EventRecord fromJson(const nlohmann::json& doc);
};

class EventLog {
public:
    EventLog() = default;

    // Streams records to a JSONL file in addition to keeping them in memory.
    void openFile(const std::string& path);

    void append(double t, const std::string& node, const std::string& kind,
                const nlohmann::json& attrs);

    const std::vector<EventRecord>& records() const { return records_; }
    void close();

private:
    std::vector<EventRecord> records_;
    std::optional<std::ofstream> file_;
};

// Reads a JSONL log back; throws CorruptLog on a malformed line.
std::vector<EventRecord> readEventLog(const std::string& path);

} // namespace mecsim

#endif
