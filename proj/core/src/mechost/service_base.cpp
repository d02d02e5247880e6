#include "mecsim/mechost/service_base.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

void MecServiceBase::onMessage(Simulator& sim, const Message& msg) {
    if (msg.kind != "http.request")
        return;
    queue_.push_back(msg);
    if (!draining_)
        drainQueue(sim);
}

void MecServiceBase::drainQueue(Simulator& sim) {
    draining_ = true;
    while (!queue_.empty()) {
        Message msg = std::move(queue_.front());
        queue_.pop_front();

        HttpRequest req;
        req.method = msg.data.value("method", "GET");
        splitTarget(msg.data.value("target", "/"), req.path, req.query);
        req.body = msg.data.value("body", "");

        HttpResponse resp;
        if (req.method != "GET" && req.method != "POST" && req.method != "PUT" &&
            req.method != "DELETE") {
            resp = HttpResponse::error(501, "unsupported method " + req.method);
        } else {
            resp = handleRequest(sim, req);
        }
        ++processed_;

        Message reply;
        reply.kind = "http.response";
        reply.data = {{"status", resp.status},
                      {"body", resp.body},
                      {"requestId", msg.data.value("requestId", "")}};
        reply.src = msg.dst;
        reply.dst = msg.src;
        sim.sendDatagram(hostNode_, std::move(reply));
    }
    draining_ = false;
}

HttpResponse MecServiceBase::handleRaw(Simulator& sim, const std::string& rawText) {
    bool unsupported = false;
    auto req = parseHttpRequest(rawText, unsupported);
    if (unsupported)
        return HttpResponse::error(501, "unsupported method");
    if (!req)
        return HttpResponse::error(400, "malformed request");
    ++processed_;
    return handleRequest(sim, *req);
}

} // namespace mecsim
