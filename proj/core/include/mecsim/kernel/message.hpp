#ifndef MECSIM_KERNEL_MESSAGE_HPP
#define MECSIM_KERNEL_MESSAGE_HPP

#include <cstdint>
#include <string>
#include <tuple>

#include <json.hpp>

namespace mecsim {

using NodeId = std::string;

// (address, port) pair used for all data-plane addressing, simulated or real.
struct Endpoint {
    std::string address;
    uint16_t port = 0;

    bool operator==(const Endpoint& o) const = default;
    auto operator<=>(const Endpoint& o) const = default;

    std::string str() const { return address + ":" + std::to_string(port); }
};

// Kernel message. `kind` selects the handler path on the receiving node;
// `data` carries the structured payload. Datagram-style messages additionally
// carry src/dst endpoints so NAT and bridge nodes can rewrite or egress them.
struct Message {
    std::string kind;
    nlohmann::json data;
    Endpoint src;
    Endpoint dst;

    // Serialized size used for link serialization delay when a bitrate is set.
    std::size_t bits() const {
        return 8 * (kind.size() + data.dump().size());
    }
};

} // namespace mecsim

#endif
