#ifndef MECSIM_APPS_BRIDGE_HPP
#define MECSIM_APPS_BRIDGE_HPP

#include <atomic>
#include <map>
#include <thread>

#include "mecsim/descriptors/scenario.hpp"
#include "mecsim/kernel/node.hpp"

namespace mecsim {

class Simulator;

// Realtime bridge between the simulated network and real UDP sockets.
//
// Egress: datagrams routed here (default route for unbound addresses) are
// written to the socket, and the (external endpoint -> simulated source)
// mapping is recorded NAT-style. Ingress: the I/O thread injects received
// datagrams into the kernel; they are delivered to the simulated endpoint the
// external peer was last talking to. The I/O thread touches kernel state only
// through the injection queue.
class UdpBridge : public Node {
public:
    UdpBridge(NodeId id, BridgeConfig config)
        : Node(std::move(id)), config_(std::move(config)) {}
    ~UdpBridge() override;

    // Opens and binds the socket, starts the I/O thread. Throws ModeMismatch
    // in virtual mode, BindFailure on socket errors.
    void attach(Simulator& sim);
    void detach();

    uint16_t boundPort() const { return boundPort_; }

    void onMessage(Simulator& sim, const Message& msg) override;

private:
    void ioLoop(Simulator& sim);

    BridgeConfig config_;
    int socketFd_ = -1;
    uint16_t boundPort_ = 0;
    std::thread ioThread_;
    std::atomic<bool> running_{false};
    std::map<std::string, Endpoint> conntrack_; // external ep -> sim source ep
};

} // namespace mecsim

#endif
