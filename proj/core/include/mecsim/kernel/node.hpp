#ifndef MECSIM_KERNEL_NODE_HPP
#define MECSIM_KERNEL_NODE_HPP

#include "mecsim/kernel/message.hpp"

namespace mecsim {

class Simulator;

// A simulated network node. Subclasses implement onMessage; all state is
// touched only from the event-loop thread.
class Node {
public:
    explicit Node(NodeId id) : id_(std::move(id)) {}
    virtual ~Node() = default;

    const NodeId& id() const { return id_; }

    virtual void onMessage(Simulator& sim, const Message& msg) = 0;

private:
    NodeId id_;
};

} // namespace mecsim

#endif
