#include "mecsim/apps/bridge.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

UdpBridge::~UdpBridge() {
    detach();
}

void UdpBridge::attach(Simulator& sim) {
    if (sim.mode() != ClockMode::Realtime)
        throw ModeMismatchError("bridge requires realtime mode");
    if (socketFd_ >= 0)
        return;

    socketFd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
    if (socketFd_ < 0)
        throw BindFailureError("socket() failed");

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(config_.bindPort);
    if (::inet_pton(AF_INET, config_.bindAddress.c_str(), &addr.sin_addr) != 1) {
        ::close(socketFd_);
        socketFd_ = -1;
        throw BindFailureError("bad bind address " + config_.bindAddress);
    }
    if (::bind(socketFd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        ::close(socketFd_);
        socketFd_ = -1;
        throw BindFailureError("bind failed on " + config_.bindAddress + ":" +
                               std::to_string(config_.bindPort));
    }

    sockaddr_in bound{};
    socklen_t len = sizeof(bound);
    ::getsockname(socketFd_, reinterpret_cast<sockaddr*>(&bound), &len);
    boundPort_ = ntohs(bound.sin_port);

    timeval timeout{0, 50000}; // 50 ms poll so detach() is prompt
    ::setsockopt(socketFd_, SOL_SOCKET, SO_RCVTIMEO, &timeout, sizeof(timeout));

    running_ = true;
    ioThread_ = std::thread([this, &sim] { ioLoop(sim); });
}

void UdpBridge::detach() {
    running_ = false;
    if (ioThread_.joinable())
        ioThread_.join();
    if (socketFd_ >= 0) {
        ::close(socketFd_);
        socketFd_ = -1;
    }
}

void UdpBridge::ioLoop(Simulator& sim) {
    char buffer[65536];
    while (running_) {
        sockaddr_in peer{};
        socklen_t peerLen = sizeof(peer);
        ssize_t n = ::recvfrom(socketFd_, buffer, sizeof(buffer), 0,
                               reinterpret_cast<sockaddr*>(&peer), &peerLen);
        if (n < 0)
            continue; // timeout or transient error
        char peerAddr[INET_ADDRSTRLEN] = {0};
        ::inet_ntop(AF_INET, &peer.sin_addr, peerAddr, sizeof(peerAddr));

        Message ingress;
        ingress.kind = "bridge.ingress";
        ingress.data = {{"payload", std::string(buffer, static_cast<size_t>(n))},
                        {"peerAddress", std::string(peerAddr)},
                        {"peerPort", ntohs(peer.sin_port)}};
        sim.injectMessage(id(), std::move(ingress));
    }
}

void UdpBridge::onMessage(Simulator& sim, const Message& msg) {
    if (msg.kind == "bridge.ingress") {
        Endpoint peer{msg.data.value("peerAddress", ""),
                      static_cast<uint16_t>(msg.data.value("peerPort", 0))};
        auto it = conntrack_.find(peer.str());
        if (it == conntrack_.end())
            return; // unsolicited external traffic
        Message delivery;
        delivery.kind = "app.datagram";
        delivery.data = {{"payload", msg.data.value("payload", "")}};
        delivery.src = peer;
        delivery.dst = it->second;
        sim.log(id(), "BRIDGE_INGRESS",
                {{"peer", peer.str()}, {"to", delivery.dst.str()}});
        sim.sendDatagram(id(), std::move(delivery));
        return;
    }

    if (msg.kind == "app.datagram") {
        // egress toward the real socket
        conntrack_[msg.dst.str()] = msg.src;
        std::string payload = msg.data.value("payload", "");

        sockaddr_in dst{};
        dst.sin_family = AF_INET;
        dst.sin_port = htons(msg.dst.port);
        if (::inet_pton(AF_INET, msg.dst.address.c_str(), &dst.sin_addr) != 1)
            return;
        ::sendto(socketFd_, payload.data(), payload.size(), 0,
                 reinterpret_cast<sockaddr*>(&dst), sizeof(dst));
        sim.log(id(), "BRIDGE_EGRESS",
                {{"to", msg.dst.str()}, {"bytes", payload.size()}});
    }
}

} // namespace mecsim
