#ifndef MECSIM_APPS_NAT_HPP
#define MECSIM_APPS_NAT_HPP

#include <vector>

#include "mecsim/descriptors/scenario.hpp"
#include "mecsim/kernel/node.hpp"

namespace mecsim {

// Destination rewrite: first rule whose externalAddr matches packet.dst wins;
// otherwise the packet passes unchanged. Payload bytes are never touched.
Message natTranslate(const std::vector<NatRule>& rules, Message packet);

// Userspace NAT router node: traffic addressed to its configured addresses is
// rewritten and re-forwarded, steering packets toward the bridge (or back
// into the simulated network).
class NatRouter : public Node {
public:
    NatRouter(NodeId id, std::vector<NatRule> rules)
        : Node(std::move(id)), rules_(std::move(rules)) {}

    const std::vector<NatRule>& rules() const { return rules_; }

    void onMessage(Simulator& sim, const Message& msg) override;

private:
    std::vector<NatRule> rules_;
};

} // namespace mecsim

#endif
