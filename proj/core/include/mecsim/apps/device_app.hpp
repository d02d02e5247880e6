#ifndef MECSIM_APPS_DEVICE_APP_HPP
#define MECSIM_APPS_DEVICE_APP_HPP

#include <map>

#include "mecsim/apps/ue_node.hpp"
#include "mecsim/apps/wire.hpp"
#include "mecsim/kernel/event_queue.hpp"

namespace mecsim {

// Lifecycle client on the UE: translates CREATE_APP / DELETE_APP datagrams
// from the UE app into Mx2 REST calls and replies with the corresponding
// acks. Mx2 errors and timeouts become result=fail acks.
class DeviceApp : public PortHandler {
public:
    DeviceApp(NodeId node, std::string address, std::string deviceAppId,
              Endpoint ualcmp, double timeout = 5.0)
        : node_(std::move(node)), address_(std::move(address)),
          deviceAppId_(std::move(deviceAppId)), ualcmp_(std::move(ualcmp)),
          timeout_(timeout) {}

    void onMessage(Simulator& sim, const Message& msg) override;

    Endpoint endpoint() const { return {address_, kDeviceAppPort}; }

private:
    struct PendingMx2 {
        std::string kind;     // CREATE_APP | DELETE_APP
        std::string appName;
        Endpoint ueApp;       // where the ack goes
        EventHandle timeoutTimer;
    };

    void handleUeRequest(Simulator& sim, const Message& msg);
    void handleMx2Response(Simulator& sim, const Message& msg);
    void sendAck(Simulator& sim, const Endpoint& ueApp, WireFields fields);
    void postMx2(Simulator& sim, const std::string& requestId,
                 const std::string& method, const std::string& target,
                 const std::string& body);

    NodeId node_;
    std::string address_;
    std::string deviceAppId_;
    Endpoint ualcmp_;
    double timeout_;
    std::map<std::string, PendingMx2> pending_;     // requestId -> request
    std::map<std::string, std::string> contexts_;   // appName -> contextId
    uint64_t nextRequestId_ = 1;
};

} // namespace mecsim

#endif
