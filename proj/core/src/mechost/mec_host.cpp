#include "mecsim/mechost/mec_host.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

MecHost::MecHost(Simulator& sim, std::string name, std::string address,
                 ResourceVector budget, SharingParadigm paradigm)
    : Node(name), sim_(sim), name_(std::move(name)), address_(std::move(address)),
      vim_(budget, paradigm) {
    auto registry = std::make_unique<ServiceRegistry>(
        Endpoint{address_, kRegistryPort});
    registry->setHostNode(id());
    registry_ = registry.get();
    ports_[kRegistryPort] = registry.get();
    platformServices_.push_back(std::move(registry));
}

void MecHost::onMessage(Simulator& sim, const Message& msg) {
    auto it = ports_.find(msg.dst.port);
    if (it == ports_.end()) {
        sim.log(id(), "DROPPED", {{"port", msg.dst.port}, {"kind", msg.kind}});
        return;
    }
    it->second->onMessage(sim, msg);
}

void MecHost::addPlatformService(std::unique_ptr<MecServiceBase> service,
                                 uint16_t port) {
    service->setHostNode(id());
    registry_->addService({service->serName(),
                           name_ + "-" + service->serName(),
                           {address_, port}});
    ports_[port] = service.get();
    platformServices_.push_back(std::move(service));
}

MecAppEntry MecHost::instantiateApp(const AppDescriptor& descriptor,
                                    const std::string& appInstanceId,
                                    const MecAppFactory& factory) {
    uint16_t port = nextAppPort_++;
    Endpoint endpoint{address_, port};
    auto& entry = vim_.registerApp(appInstanceId, id(), endpoint,
                                   descriptor.virtualComputeDescriptor);

    auto app = factory ? factory(descriptor) : nullptr;
    if (app) {
        app->deploy(appInstanceId, endpoint, this);
        ports_[port] = app.get();
        apps_[appInstanceId] = std::move(app);
        apps_[appInstanceId]->start(sim_);
    }
    sim_.log(id(), "APP_INSTANTIATED",
             {{"appInstanceId", appInstanceId},
              {"endpoint", endpoint.str()},
              {"allocated", entry.allocated.str()}});
    return entry;
}

void MecHost::terminateApp(const std::string& appInstanceId) {
    auto it = vim_.mecApps().find(appInstanceId);
    if (it == vim_.mecApps().end())
        throw UnknownAppError("no such app instance: " + appInstanceId);
    uint16_t port = it->second.endpoint.port;
    vim_.deregisterApp(appInstanceId, &sim_);

    auto at = apps_.find(appInstanceId);
    if (at != apps_.end()) {
        at->second->stop(sim_);
        apps_.erase(at);
    }
    ports_.erase(port);
    sim_.log(id(), "APP_TERMINATED", {{"appInstanceId", appInstanceId}});
}

void MecHost::executeInstructions(const std::string& appInstanceId, int64_t n,
                                  std::function<void()> onComplete) {
    double t = vim_.computeProcessingTime(appInstanceId, n);
    auto handle = sim_.scheduleAfter(t, std::move(onComplete));
    vim_.trackJob(appInstanceId, handle);
}

void MecHost::bindPort(uint16_t port, PortHandler* handler) {
    ports_[port] = handler;
}

void MecHost::unbindPort(uint16_t port) {
    ports_.erase(port);
}

} // namespace mecsim
