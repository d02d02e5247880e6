#include "mecsim/orchestration/orchestrator.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

MecHost* selectMecHost(const AppDescriptor& descriptor,
                       const std::vector<MecHost*>& managedHosts) {
    for (MecHost* host : managedHosts) {
        bool servicesOk = true;
        for (const auto& serName : descriptor.appServiceRequired)
            if (!host->hasService(serName)) {
                servicesOk = false;
                break;
            }
        if (!servicesOk)
            continue;
        if (resourceFits(descriptor.virtualComputeDescriptor, host->vim().free()))
            return host;
    }
    throw NoSuitableHostError("no MEC host satisfies descriptor " +
                              descriptor.appDId);
}

Orchestrator::Orchestrator(Simulator& sim, NodeId id,
                           std::vector<MecHost*> managedHosts,
                           double processingDelay)
    : Node(std::move(id)), sim_(sim), managedHosts_(std::move(managedHosts)),
      processingDelay_(processingDelay) {}

std::string Orchestrator::onboardAppPackage(const AppDescriptor& descriptor) {
    if (onboarded_.count(descriptor.appDId))
        throw DuplicateAppDIdError("already onboarded: " + descriptor.appDId);
    onboarded_[descriptor.appDId] = descriptor;
    sim_.log(id(), "APP_ONBOARDED",
             {{"appDId", descriptor.appDId}, {"appName", descriptor.appName}});
    return descriptor.appDId;
}

void Orchestrator::onMessage(Simulator& sim, const Message& msg) {
    const auto& data = msg.data;
    std::string requestId = data.value("requestId", "");
    NodeId replyTo = data.value("replyTo", "");

    auto reply = [this, requestId, replyTo](const std::string& kind,
                                            nlohmann::json body) {
        body["requestId"] = requestId;
        sim_.sendMessage(id(), replyTo, Message{kind, std::move(body)});
    };

    if (msg.kind == "orch.listApps") {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& [appDId, d] : onboarded_)
            list.push_back({{"appInfo",
                             {{"appDId", d.appDId},
                              {"appName", d.appName},
                              {"appProvider", d.appProvider}}}});
        reply("orch.listAppsResult", {{"appList", list.dump()}});
    } else if (msg.kind == "orch.createContext") {
        CreateContextRequest req;
        req.appDId = data.value("appDId", "");
        req.appName = data.value("appName", "");
        req.appPackageSource = data.value("appPackageSource", "");
        req.deviceAppId = data.value("deviceAppId", "");
        req.callbackReference = data.value("callbackReference", "");
        createAppContext(req, [reply](const AppContext& ctx) {
            reply("orch.createContextResult",
                  {{"ok", ctx.state == ContextState::Running},
                   {"context", ctx.toJson().dump()}});
        });
    } else if (msg.kind == "orch.deleteContext") {
        try {
            deleteAppContext(data.value("contextId", ""),
                             [reply](const AppContext& ctx) {
                                 reply("orch.deleteContextResult",
                                       {{"ok", ctx.state == ContextState::Terminated},
                                        {"context", ctx.toJson().dump()}});
                             });
        } catch (const SimError& e) {
            reply("orch.deleteContextResult",
                  {{"ok", false}, {"error", e.code()}, {"reason", e.what()}});
        }
    }
}

std::string Orchestrator::createAppContext(const CreateContextRequest& request,
                                           ContextCallback onDone) {
    AppContext ctx;
    ctx.contextId = "ctx-" + std::to_string(nextContextId_++);
    ctx.appDId = request.appDId;
    ctx.deviceAppId = request.deviceAppId;
    ctx.callbackReference = request.callbackReference;
    if (!request.appPackageSource.empty())
        ctx.appPackageSource = request.appPackageSource;
    if (ctx.appDId.empty() && !request.appName.empty()) {
        // name-based lookup, the Device app's usual request form
        for (const auto& [appDId, d] : onboarded_)
            if (d.appName == request.appName) {
                ctx.appDId = appDId;
                break;
            }
        if (ctx.appDId.empty() && !ctx.appPackageSource)
            ctx.failureReason = "unknown app name: " + request.appName;
    }

    sim_.log(id(), "CONTEXT_REQUESTED",
             {{"contextId", ctx.contextId},
              {"appDId", ctx.appDId},
              {"deviceAppId", ctx.deviceAppId}});
    ctx.transition(ContextState::Instantiating);
    std::string contextId = ctx.contextId;
    contexts_[contextId] = std::move(ctx);

    sim_.scheduleAfter(processingDelay_, [this, contextId, onDone] {
        finishCreate(contextId, onDone);
    });
    return contextId;
}

const AppDescriptor* Orchestrator::resolveDescriptor(const AppContext& ctx) {
    auto it = onboarded_.find(ctx.appDId);
    if (it != onboarded_.end())
        return &it->second;
    if (ctx.appPackageSource && loader_) {
        // on-demand onboarding from the Device app's appPackageSource
        AppDescriptor d = loader_(*ctx.appPackageSource);
        auto [jt, inserted] = onboarded_.emplace(d.appDId, std::move(d));
        if (inserted)
            sim_.log(id(), "APP_ONBOARDED",
                     {{"appDId", jt->first}, {"appName", jt->second.appName},
                      {"source", *ctx.appPackageSource}});
        return &jt->second;
    }
    return nullptr;
}

void Orchestrator::finishCreate(const std::string& contextId,
                                ContextCallback onDone) {
    AppContext& ctx = contexts_.at(contextId);

    const AppDescriptor* descriptor = nullptr;
    try {
        descriptor = resolveDescriptor(ctx);
    } catch (const SimError& e) {
        ctx.failureReason = e.what();
    }

    if (!descriptor) {
        if (ctx.failureReason.empty())
            ctx.failureReason = "unknown appDId: " + ctx.appDId;
        ctx.transition(ContextState::Failed);
        sim_.log(id(), "CONTEXT_FAILED",
                 {{"contextId", ctx.contextId}, {"reason", ctx.failureReason}});
        if (onDone)
            onDone(ctx);
        return;
    }
    ctx.appDId = descriptor->appDId;

    if (descriptor->isExternal()) {
        // external app: endpoint returned verbatim, no host allocation
        ctx.external = true;
        ctx.transition(ContextState::Running);
        ctx.appEndpoint = Endpoint{descriptor->emulatedMecApplication->ipAddress,
                                   descriptor->emulatedMecApplication->port};
        sim_.log(id(), "CONTEXT_RUNNING",
                 {{"contextId", ctx.contextId},
                  {"appDId", ctx.appDId},
                  {"external", true},
                  {"endpoint", ctx.appEndpoint->str()}});
        snapshotHosts();
        if (onDone)
            onDone(ctx);
        return;
    }

    try {
        MecHost* host = selectMecHost(*descriptor, managedHosts_);
        std::string appInstanceId =
            descriptor->appName + "-" + std::to_string(nextInstanceId_++);
        MecAppFactory factory = defaultFactory_;
        auto ft = factories_.find(descriptor->appName);
        if (ft != factories_.end())
            factory = ft->second;
        MecAppEntry entry = host->instantiateApp(*descriptor, appInstanceId, factory);
        ctx.hostName = host->name();
        ctx.appInstanceId = appInstanceId;
        ctx.transition(ContextState::Running);
        ctx.appEndpoint = entry.endpoint;
        sim_.log(id(), "CONTEXT_RUNNING",
                 {{"contextId", ctx.contextId},
                  {"appDId", ctx.appDId},
                  {"hostName", *ctx.hostName},
                  {"endpoint", ctx.appEndpoint->str()}});
    } catch (const SimError& e) {
        ctx.failureReason = e.what();
        ctx.transition(ContextState::Failed);
        sim_.log(id(), "CONTEXT_FAILED",
                 {{"contextId", ctx.contextId}, {"reason", ctx.failureReason}});
    }
    snapshotHosts();
    if (onDone)
        onDone(ctx);
}

void Orchestrator::deleteAppContext(const std::string& contextId,
                                    ContextCallback onDone) {
    auto it = contexts_.find(contextId);
    if (it == contexts_.end())
        throw UnknownContextError("no such context: " + contextId);
    AppContext& ctx = it->second;
    if (ctx.state != ContextState::Running)
        throw IllegalStateError("context " + contextId + " is " +
                                contextStateName(ctx.state) + ", not RUNNING");
    ctx.transition(ContextState::Terminating);
    sim_.log(id(), "CONTEXT_TERMINATING", {{"contextId", contextId}});
    sim_.scheduleAfter(processingDelay_, [this, contextId, onDone] {
        finishDelete(contextId, onDone);
    });
}

void Orchestrator::finishDelete(const std::string& contextId,
                                ContextCallback onDone) {
    AppContext& ctx = contexts_.at(contextId);
    if (!ctx.external && ctx.hostName) {
        for (MecHost* host : managedHosts_)
            if (host->name() == *ctx.hostName) {
                host->terminateApp(ctx.appInstanceId);
                break;
            }
    }
    ctx.transition(ContextState::Terminated);
    sim_.log(id(), "CONTEXT_TERMINATED", {{"contextId", contextId}});
    snapshotHosts();
    if (onDone)
        onDone(ctx);
}

void Orchestrator::snapshotHosts() {
    for (const MecHost* host : managedHosts_) {
        ResourceVector allocated{};
        for (const auto& [id, entry] : host->vim().mecApps())
            allocated = allocated + entry.allocated;
        auto vec = [](const ResourceVector& v) {
            return nlohmann::json{{"ram", v.ram}, {"disk", v.disk}, {"cpu", v.cpu}};
        };
        sim_.log(host->name(), "RESOURCE_SNAPSHOT",
                 {{"budget", vec(host->vim().budget())},
                  {"free", vec(host->vim().free())},
                  {"allocated", vec(allocated)}});
    }
}

} // namespace mecsim
