#include "mecsim/orchestration/app_context.hpp"

namespace mecsim {

std::string contextStateName(ContextState s) {
    switch (s) {
        case ContextState::Requested: return "REQUESTED";
        case ContextState::Instantiating: return "INSTANTIATING";
        case ContextState::Running: return "RUNNING";
        case ContextState::Terminating: return "TERMINATING";
        case ContextState::Terminated: return "TERMINATED";
        case ContextState::Failed: return "FAILED";
    }
    return "?";
}

void AppContext::transition(ContextState next) {
    bool legal = false;
    switch (state) {
        case ContextState::Requested:
            legal = next == ContextState::Instantiating;
            break;
        case ContextState::Instantiating:
            legal = next == ContextState::Running || next == ContextState::Failed;
            break;
        case ContextState::Running:
            legal = next == ContextState::Terminating;
            break;
        case ContextState::Terminating:
            legal = next == ContextState::Terminated;
            break;
        case ContextState::Terminated:
        case ContextState::Failed:
            legal = false;
            break;
    }
    if (!legal)
        throw IllegalStateError(std::string("illegal context transition ") +
                                contextStateName(state) + " -> " + contextStateName(next));
    state = next;
    if (state != ContextState::Running)
        appEndpoint.reset();
    if (state != ContextState::Running && state != ContextState::Instantiating &&
        state != ContextState::Terminating)
        hostName.reset();
}

nlohmann::ordered_json AppContext::toJson() const {
    nlohmann::ordered_json out;
    out["contextId"] = contextId;
    out["appDId"] = appDId;
    out["deviceAppId"] = deviceAppId;
    out["state"] = contextStateName(state);
    if (appEndpoint)
        out["appEndpoint"] = {{"address", appEndpoint->address},
                              {"port", appEndpoint->port}};
    if (hostName)
        out["hostName"] = *hostName;
    if (!failureReason.empty())
        out["reason"] = failureReason;
    return out;
}

} // namespace mecsim
