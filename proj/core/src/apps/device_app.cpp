#include "mecsim/apps/device_app.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

void DeviceApp::onMessage(Simulator& sim, const Message& msg) {
    if (msg.kind == "app.datagram")
        handleUeRequest(sim, msg);
    else if (msg.kind == "http.response")
        handleMx2Response(sim, msg);
}

void DeviceApp::sendAck(Simulator& sim, const Endpoint& ueApp, WireFields fields) {
    Message out;
    out.kind = "app.datagram";
    out.data = {{"payload", encodeWire(fields)}};
    out.src = endpoint();
    out.dst = ueApp;
    sim.sendDatagram(node_, std::move(out));
}

void DeviceApp::postMx2(Simulator& sim, const std::string& requestId,
                        const std::string& method, const std::string& target,
                        const std::string& body) {
    Message req;
    req.kind = "http.request";
    req.data = {{"method", method},
                {"target", target},
                {"body", body},
                {"requestId", requestId}};
    req.src = endpoint();
    req.dst = ualcmp_;
    sim.sendDatagram(node_, std::move(req));
}

void DeviceApp::handleUeRequest(Simulator& sim, const Message& msg) {
    auto fields = decodeWire(msg.data.value("payload", ""));
    std::string kind = fields.count("kind") ? fields["kind"] : "";
    std::string appName = fields.count("appName") ? fields["appName"] : "";
    Endpoint ueApp = msg.src;

    if (kind == "CREATE_APP") {
        std::string requestId = "dev-" + std::to_string(nextRequestId_++);
        nlohmann::ordered_json body{{"deviceAppId", deviceAppId_},
                                    {"callbackReference", ""}};
        if (!appName.empty())
            body["appName"] = appName;
        if (fields.count("appPackageSource"))
            body["appPackageSource"] = fields["appPackageSource"];
        postMx2(sim, requestId, "POST", "/dev_app/v1/app_contexts", body.dump());

        auto timer = sim.scheduleAfter(timeout_, [this, &sim, requestId] {
            auto it = pending_.find(requestId);
            if (it == pending_.end())
                return;
            PendingMx2 req = it->second;
            pending_.erase(it);
            sendAck(sim, req.ueApp,
                    {{"kind", "ACK_CREATE_APP"},
                     {"result", "fail"},
                     {"reason", "timeout waiting for UALCMP"}});
        });
        pending_[requestId] = {kind, appName, ueApp, timer};
    } else if (kind == "DELETE_APP") {
        auto ctx = contexts_.find(appName);
        if (ctx == contexts_.end()) {
            sendAck(sim, ueApp,
                    {{"kind", "ACK_DELETE_APP"},
                     {"result", "fail"},
                     {"reason", "no running context for " + appName}});
            return;
        }
        std::string requestId = "dev-" + std::to_string(nextRequestId_++);
        postMx2(sim, requestId, "DELETE",
                "/dev_app/v1/app_contexts/" + ctx->second, "");
        auto timer = sim.scheduleAfter(timeout_, [this, &sim, requestId] {
            auto it = pending_.find(requestId);
            if (it == pending_.end())
                return;
            PendingMx2 req = it->second;
            pending_.erase(it);
            sendAck(sim, req.ueApp,
                    {{"kind", "ACK_DELETE_APP"},
                     {"result", "fail"},
                     {"reason", "timeout waiting for UALCMP"}});
        });
        pending_[requestId] = {kind, appName, ueApp, timer};
    }
}

void DeviceApp::handleMx2Response(Simulator& sim, const Message& msg) {
    auto it = pending_.find(msg.data.value("requestId", ""));
    if (it == pending_.end())
        return;
    PendingMx2 req = it->second;
    pending_.erase(it);
    sim.cancel(req.timeoutTimer);

    int status = msg.data.value("status", 0);
    std::string body = msg.data.value("body", "");

    if (req.kind == "CREATE_APP") {
        if (status == 201) {
            auto ctx = nlohmann::json::parse(body);
            contexts_[req.appName] = ctx.value("contextId", "");
            const auto& ep = ctx.at("appEndpoint");
            sendAck(sim, req.ueApp,
                    {{"kind", "ACK_CREATE_APP"},
                     {"result", "ok"},
                     {"address", ep.at("address").get<std::string>()},
                     {"port", std::to_string(ep.at("port").get<int>())}});
        } else {
            std::string reason = "mx2 status " + std::to_string(status);
            try {
                auto parsed = nlohmann::json::parse(body);
                if (parsed.contains("reason"))
                    reason = parsed["reason"].get<std::string>();
                else if (parsed.contains("error"))
                    reason = parsed["error"].get<std::string>();
            } catch (const nlohmann::json::parse_error&) {
            }
            sendAck(sim, req.ueApp,
                    {{"kind", "ACK_CREATE_APP"},
                     {"result", "fail"},
                     {"reason", reason}});
        }
    } else if (req.kind == "DELETE_APP") {
        if (status == 204) {
            contexts_.erase(req.appName);
            sendAck(sim, req.ueApp,
                    {{"kind", "ACK_DELETE_APP"}, {"result", "ok"}});
        } else {
            sendAck(sim, req.ueApp,
                    {{"kind", "ACK_DELETE_APP"},
                     {"result", "fail"},
                     {"reason", "mx2 status " + std::to_string(status)}});
        }
    }
}

} // namespace mecsim
