#ifndef MECSIM_KERNEL_TRANSPORT_HPP
#define MECSIM_KERNEL_TRANSPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mecsim/errors.hpp"
#include "mecsim/kernel/event_queue.hpp"
#include "mecsim/kernel/message.hpp"

namespace mecsim {

// Bidirectional point-to-point link with symmetric parameters.
struct TransportLink {
    NodeId a;
    NodeId b;
    SimTime latency = 0;                  // seconds
    std::optional<double> bitrate;        // bits/second, unset = no serialization delay
};

// Abstracted transport graph. Routing picks the minimum-total-latency path
// (deterministic tie-break on node ids); per-directed-link FIFO is enforced
// by clamping each hop's arrival to the previous arrival on that link.
class TransportGraph {
public:
    void addLink(const TransportLink& link);
    bool hasNode(const NodeId& n) const { return adj_.count(n) > 0; }

    // Ordered node sequence src..dst. Throws Unroutable.
    std::vector<NodeId> route(const NodeId& src, const NodeId& dst) const;

    // Arrival time at dst for a payload of `bits` sent from src at `sendTime`.
    // Mutates per-link FIFO clamps, so calls must be made in send order.
    SimTime deliveryTime(const NodeId& src, const NodeId& dst,
                         SimTime sendTime, std::size_t bits);

    // Endpoint address -> owning node, for datagram-style addressing.
    void bindAddress(const std::string& address, const NodeId& node);
    void unbindAddress(const std::string& address);
    // Node receiving traffic for addresses with no binding (NAT/bridge).
    void setDefaultRoute(const NodeId& node) { defaultRoute_ = node; }
    std::optional<NodeId> resolveAddress(const std::string& address) const;

private:
    struct Edge {
        NodeId to;
        SimTime latency;
        std::optional<double> bitrate;
    };

    std::map<NodeId, std::vector<Edge>> adj_;
    std::map<std::pair<NodeId, NodeId>, SimTime> lastArrival_;
    std::map<std::string, NodeId> addresses_;
    std::optional<NodeId> defaultRoute_;
};

} // namespace mecsim

#endif
