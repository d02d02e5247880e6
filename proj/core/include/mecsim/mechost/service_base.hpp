#ifndef MECSIM_MECHOST_SERVICE_BASE_HPP
#define MECSIM_MECHOST_SERVICE_BASE_HPP

#include <deque>
#include <string>

#include "mecsim/http/http.hpp"
#include "mecsim/kernel/message.hpp"

namespace mecsim {

class Simulator;

// Handler bound to one port of a node (platform service, MEC app instance,
// or app-side datagram listener).
class PortHandler {
public:
    virtual ~PortHandler() = default;
    virtual void onMessage(Simulator& sim, const Message& msg) = 0;
};

// Generic MEC-service HTTP server behavior: request parsing, FIFO queueing
// across connections, error mapping. Service logic only implements
// handleRequest over (method, path, query, body).
//
// Simulated requests arrive as "http.request" messages; bridge-facing raw
// HTTP/1.1 text goes through handleRaw.
class MecServiceBase : public PortHandler {
public:
    MecServiceBase(std::string serName, Endpoint endpoint)
        : serName_(std::move(serName)), endpoint_(std::move(endpoint)) {}

    const std::string& serName() const { return serName_; }
    const Endpoint& endpoint() const { return endpoint_; }
    uint64_t processedRequests() const { return processed_; }

    // Node the service is deployed on; used as the source for replies.
    void setHostNode(NodeId node) { hostNode_ = std::move(node); }
    const NodeId& hostNode() const { return hostNode_; }

    void onMessage(Simulator& sim, const Message& msg) override;

    // Raw HTTP/1.1 entry point: 400 on malformed start line, 501 on methods
    // outside {GET, POST, PUT, DELETE}.
    HttpResponse handleRaw(Simulator& sim, const std::string& rawText);

protected:
    virtual HttpResponse handleRequest(Simulator& sim, const HttpRequest& req) = 0;

private:
    void drainQueue(Simulator& sim);

    std::string serName_;
    Endpoint endpoint_;
    NodeId hostNode_;
    std::deque<Message> queue_;
    bool draining_ = false;
    uint64_t processed_ = 0;
};

} // namespace mecsim

#endif
