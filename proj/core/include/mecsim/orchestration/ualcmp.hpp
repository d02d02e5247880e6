#ifndef MECSIM_ORCHESTRATION_UALCMP_HPP
#define MECSIM_ORCHESTRATION_UALCMP_HPP

#include <map>

#include "mecsim/http/http.hpp"
#include "mecsim/kernel/node.hpp"

namespace mecsim {

class Simulator;

inline constexpr uint16_t kUalcmpPort = 8740;

// User Application Lifecycle Management Proxy: the Mx2 REST front-end for
// Device apps. Routes:
//   GET    /dev_app/v1/app_list
//   POST   /dev_app/v1/app_contexts
//   DELETE /dev_app/v1/app_contexts/{contextId}
// POST is answered only once the orchestrator reports the final context
// state (single round trip; callbackReference is stored but unused).
class Ualcmp : public Node {
public:
    Ualcmp(NodeId id, std::string address, NodeId orchestratorNode)
        : Node(std::move(id)), address_(std::move(address)),
          orchestrator_(std::move(orchestratorNode)) {}

    const std::string& address() const { return address_; }
    Endpoint endpoint() const { return {address_, kUalcmpPort}; }

    void onMessage(Simulator& sim, const Message& msg) override;

private:
    struct PendingRequest {
        Endpoint client;
        std::string clientRequestId;
    };

    void handleHttp(Simulator& sim, const Message& msg);
    void handleOrchestratorReply(Simulator& sim, const Message& msg);
    void respond(Simulator& sim, const PendingRequest& to, const HttpResponse& resp);
    std::string forward(Simulator& sim, const Message& httpMsg,
                        const std::string& kind, nlohmann::json data);

    std::string address_;
    NodeId orchestrator_;
    std::map<std::string, PendingRequest> pending_;
    uint64_t nextRequestId_ = 1;
};

} // namespace mecsim

#endif
