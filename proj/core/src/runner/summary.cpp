#include "mecsim/runner/summary.hpp"

namespace mecsim {

namespace {

ResourceVector vectorFrom(const nlohmann::json& obj) {
    return {obj.value("ram", int64_t{0}), obj.value("disk", int64_t{0}),
            obj.value("cpu", int64_t{0})};
}

const std::map<std::string, std::string> kContextStates{
    {"CONTEXT_REQUESTED", "REQUESTED"},
    {"CONTEXT_RUNNING", "RUNNING"},
    {"CONTEXT_TERMINATING", "TERMINATING"},
    {"CONTEXT_TERMINATED", "TERMINATED"},
    {"CONTEXT_FAILED", "FAILED"},
};

} // namespace

RunSummary summarizeRecords(const std::vector<EventRecord>& records) {
    RunSummary out;
    out.eventCount = records.size();
    for (const auto& rec : records) {
        if (rec.kind == "RESOURCE_SNAPSHOT") {
            out.perHost[rec.node] = {vectorFrom(rec.attrs.value("budget",
                                                    nlohmann::ordered_json::object())),
                                     vectorFrom(rec.attrs.value("free",
                                                    nlohmann::ordered_json::object()))};
        } else if (auto it = kContextStates.find(rec.kind);
                   it != kContextStates.end()) {
            std::string contextId = rec.attrs.value("contextId", "");
            if (!contextId.empty())
                out.perContext[contextId][it->second] = rec.t;
        } else if (rec.kind == "WARNING_ALERT") {
            out.alertLatencies.push_back(rec.attrs.value("latency", 0.0));
        }
    }
    return out;
}

RunSummary summarizeLog(const std::string& logPath) {
    return summarizeRecords(readEventLog(logPath));
}

nlohmann::ordered_json RunSummary::toJson() const {
    nlohmann::ordered_json hosts = nlohmann::ordered_json::object();
    for (const auto& [name, res] : perHost)
        hosts[name] = {{"budget",
                        {{"ram", res.budget.ram},
                         {"disk", res.budget.disk},
                         {"cpu", res.budget.cpu}}},
                       {"free",
                        {{"ram", res.free.ram},
                         {"disk", res.free.disk},
                         {"cpu", res.free.cpu}}}};
    nlohmann::ordered_json contexts = nlohmann::ordered_json::object();
    for (const auto& [contextId, states] : perContext) {
        nlohmann::ordered_json stateTimes = nlohmann::ordered_json::object();
        for (const auto& [state, t] : states)
            stateTimes[state] = t;
        contexts[contextId] = stateTimes;
    }
    return {{"eventCount", eventCount},
            {"perHost", hosts},
            {"perContext", contexts},
            {"alertLatencies", alertLatencies}};
}

} // namespace mecsim
