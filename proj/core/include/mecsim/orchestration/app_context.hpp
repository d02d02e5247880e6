#ifndef MECSIM_ORCHESTRATION_APP_CONTEXT_HPP
#define MECSIM_ORCHESTRATION_APP_CONTEXT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "mecsim/errors.hpp"
#include "mecsim/kernel/message.hpp"

namespace mecsim {

enum class ContextState {
    Requested,
    Instantiating,
    Running,
    Terminating,
    Terminated,
    Failed,
};

std::string contextStateName(ContextState s);

// Mx2 lifecycle record linking a Device app's request to an instantiated (or
// external) MEC app endpoint.
//
// Invariants: appEndpoint is set iff state == Running; hostName is set iff a
// simulated app is Running or Instantiating; transitions follow
// Requested -> Instantiating -> {Running, Failed}, Running -> Terminating ->
// Terminated.
struct AppContext {
    std::string contextId;
    std::string appDId;
    std::string deviceAppId;
    std::string callbackReference;
    ContextState state = ContextState::Requested;
    std::optional<Endpoint> appEndpoint;
    std::optional<std::string> hostName;
    std::optional<std::string> appPackageSource;
    std::string appInstanceId;
    bool external = false;
    std::string failureReason;

    void transition(ContextState next);

    nlohmann::ordered_json toJson() const;
};

} // namespace mecsim

#endif
