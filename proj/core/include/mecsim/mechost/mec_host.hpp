#ifndef MECSIM_MECHOST_MEC_HOST_HPP
#define MECSIM_MECHOST_MEC_HOST_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "mecsim/kernel/node.hpp"
#include "mecsim/mechost/service_registry.hpp"
#include "mecsim/mechost/vim.hpp"

namespace mecsim {

class MecHost;

// Base for MEC app instances deployed on a host's virtualization
// infrastructure. Apps are dynamically created by the VIM at instantiation.
class MecAppBase : public PortHandler {
public:
    virtual void start(Simulator&) {}
    virtual void stop(Simulator&) {}
    void onMessage(Simulator&, const Message&) override {}

    const std::string& appInstanceId() const { return appInstanceId_; }
    const Endpoint& endpoint() const { return endpoint_; }
    MecHost* host() const { return host_; }

    void deploy(std::string appInstanceId, Endpoint endpoint, MecHost* host) {
        appInstanceId_ = std::move(appInstanceId);
        endpoint_ = std::move(endpoint);
        host_ = host;
    }

private:
    std::string appInstanceId_;
    Endpoint endpoint_;
    MecHost* host_ = nullptr;
};

using MecAppFactory =
    std::function<std::unique_ptr<MecAppBase>(const AppDescriptor&)>;

// One MEC host: a transport node carrying the MEC platform (service registry
// plus MEC services, dispatched by destination port) and the instantiated MEC
// apps, with the VIM accounting resources.
class MecHost : public Node {
public:
    MecHost(Simulator& sim, std::string name, std::string address,
            ResourceVector budget, SharingParadigm paradigm);

    const std::string& name() const { return name_; }
    const std::string& address() const { return address_; }
    Vim& vim() { return vim_; }
    const Vim& vim() const { return vim_; }
    ServiceRegistry& registry() { return *registry_; }

    // true iff serName is running on this host's platform.
    bool hasService(const std::string& serName) const {
        return registry_->services().count(serName) > 0;
    }

    void onMessage(Simulator& sim, const Message& msg) override;

    // Deploys a platform service on the given port and lists it in the
    // registry.
    void addPlatformService(std::unique_ptr<MecServiceBase> service, uint16_t port);

    MecAppEntry instantiateApp(const AppDescriptor& descriptor,
                               const std::string& appInstanceId,
                               const MecAppFactory& factory);
    void terminateApp(const std::string& appInstanceId);

    // Runs `n` instructions for an app through the VIM delay model; the
    // completion callback fires after the computed processing time and is
    // cancelled if the app is terminated first.
    void executeInstructions(const std::string& appInstanceId, int64_t n,
                             std::function<void()> onComplete);

    void bindPort(uint16_t port, PortHandler* handler);
    void unbindPort(uint16_t port);

private:
    Simulator& sim_;
    std::string name_;
    std::string address_;
    Vim vim_;
    ServiceRegistry* registry_ = nullptr;
    std::map<uint16_t, PortHandler*> ports_;
    std::vector<std::unique_ptr<MecServiceBase>> platformServices_;
    std::map<std::string, std::unique_ptr<MecAppBase>> apps_;
    uint16_t nextAppPort_ = 4001;
};

} // namespace mecsim

#endif
