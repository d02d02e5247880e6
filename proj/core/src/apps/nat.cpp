#include "mecsim/apps/nat.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

Message natTranslate(const std::vector<NatRule>& rules, Message packet) {
    for (const auto& rule : rules) {
        if (rule.externalAddr == packet.dst) {
            packet.dst = rule.internalAddr;
            break;
        }
    }
    return packet;
}

void NatRouter::onMessage(Simulator& sim, const Message& msg) {
    Message translated = natTranslate(rules_, msg);
    if (translated.dst == msg.dst)
        return; // no rule matched and the packet already reached us: drop
    sim.log(id(), "NAT_TRANSLATE",
            {{"from", msg.dst.str()}, {"to", translated.dst.str()}});
    sim.sendDatagram(id(), std::move(translated));
}

} // namespace mecsim
