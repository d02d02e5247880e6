#include "mecsim/orchestration/ualcmp.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

namespace {
const std::string kAppListPath = "/dev_app/v1/app_list";
const std::string kContextsPath = "/dev_app/v1/app_contexts";
} // namespace

void Ualcmp::onMessage(Simulator& sim, const Message& msg) {
    if (msg.kind == "http.request")
        handleHttp(sim, msg);
    else if (msg.kind.rfind("orch.", 0) == 0)
        handleOrchestratorReply(sim, msg);
}

void Ualcmp::respond(Simulator& sim, const PendingRequest& to,
                     const HttpResponse& resp) {
    Message reply;
    reply.kind = "http.response";
    reply.data = {{"status", resp.status},
                  {"body", resp.body},
                  {"requestId", to.clientRequestId}};
    reply.src = endpoint();
    reply.dst = to.client;
    sim.sendDatagram(id(), std::move(reply));
}

std::string Ualcmp::forward(Simulator& sim, const Message& httpMsg,
                            const std::string& kind, nlohmann::json data) {
    std::string requestId = "mx2-" + std::to_string(nextRequestId_++);
    pending_[requestId] = {httpMsg.src, httpMsg.data.value("requestId", "")};
    data["requestId"] = requestId;
    data["replyTo"] = id();
    sim.sendMessage(id(), orchestrator_, Message{kind, std::move(data)});
    return requestId;
}

void Ualcmp::handleHttp(Simulator& sim, const Message& msg) {
    HttpRequest req;
    req.method = msg.data.value("method", "GET");
    splitTarget(msg.data.value("target", "/"), req.path, req.query);
    req.body = msg.data.value("body", "");
    PendingRequest direct{msg.src, msg.data.value("requestId", "")};

    sim.log(id(), "MX2_REQUEST", {{"method", req.method}, {"path", req.path}});

    if (req.method == "GET" && req.path == kAppListPath) {
        forward(sim, msg, "orch.listApps", {});
        return;
    }

    if (req.method == "POST" && req.path == kContextsPath) {
        nlohmann::json body;
        try {
            body = nlohmann::json::parse(req.body);
        } catch (const nlohmann::json::parse_error&) {
            respond(sim, direct, HttpResponse::error(400, "malformed JSON body"));
            return;
        }
        if (!body.is_object() ||
            (!body.contains("appDId") && !body.contains("appName") &&
             !body.contains("appPackageSource"))) {
            respond(sim, direct,
                    HttpResponse::error(400,
                        "body must name appDId, appName or appPackageSource"));
            return;
        }
        forward(sim, msg, "orch.createContext",
                {{"appDId", body.value("appDId", "")},
                 {"appName", body.value("appName", "")},
                 {"appPackageSource", body.value("appPackageSource", "")},
                 {"deviceAppId", body.value("deviceAppId", "")},
                 {"callbackReference", body.value("callbackReference", "")}});
        return;
    }

    if (req.method == "DELETE" && req.path.rfind(kContextsPath + "/", 0) == 0) {
        std::string contextId = req.path.substr(kContextsPath.size() + 1);
        if (contextId.empty()) {
            respond(sim, direct, HttpResponse::error(404, "missing contextId"));
            return;
        }
        forward(sim, msg, "orch.deleteContext", {{"contextId", contextId}});
        return;
    }

    respond(sim, direct, HttpResponse::error(404, "unknown route " + req.path));
}

void Ualcmp::handleOrchestratorReply(Simulator& sim, const Message& msg) {
    auto it = pending_.find(msg.data.value("requestId", ""));
    if (it == pending_.end())
        return;
    PendingRequest to = it->second;
    pending_.erase(it);

    if (msg.kind == "orch.listAppsResult") {
        auto list = nlohmann::json::parse(msg.data.value("appList", "[]"));
        respond(sim, to, HttpResponse::json(200, {{"appList", list}}));
    } else if (msg.kind == "orch.createContextResult") {
        auto ctx = nlohmann::json::parse(msg.data.value("context", "{}"));
        if (msg.data.value("ok", false))
            respond(sim, to, HttpResponse::json(201, ctx));
        else
            respond(sim, to, HttpResponse::json(500, ctx));
    } else if (msg.kind == "orch.deleteContextResult") {
        if (msg.data.value("ok", false)) {
            respond(sim, to, HttpResponse{204, ""});
        } else {
            std::string code = msg.data.value("error", "");
            int status = (code == "UnknownContext") ? 404
                        : (code == "IllegalState") ? 409 : 500;
            respond(sim, to,
                    HttpResponse::error(status, msg.data.value("reason", "")));
        }
    }
}

} // namespace mecsim
