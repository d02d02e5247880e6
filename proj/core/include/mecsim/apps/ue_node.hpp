#ifndef MECSIM_APPS_UE_NODE_HPP
#define MECSIM_APPS_UE_NODE_HPP

#include <map>

#include "mecsim/kernel/node.hpp"
#include "mecsim/mechost/service_base.hpp"

namespace mecsim {

inline constexpr uint16_t kUeAppPort = 4000;
inline constexpr uint16_t kDeviceAppPort = 4500;

// UE transport node. The Device app and the UE app live on it as port
// handlers, matching the car modules of the reference scenario.
class UeNode : public Node {
public:
    UeNode(NodeId id, std::string address)
        : Node(std::move(id)), address_(std::move(address)) {}

    const std::string& address() const { return address_; }

    void bindPort(uint16_t port, PortHandler* handler) { ports_[port] = handler; }

    void onMessage(Simulator& sim, const Message& msg) override {
        auto it = ports_.find(msg.dst.port);
        if (it != ports_.end())
            it->second->onMessage(sim, msg);
    }

private:
    std::string address_;
    std::map<uint16_t, PortHandler*> ports_;
};

} // namespace mecsim

#endif
