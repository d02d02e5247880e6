#ifndef MECSIM_ORCHESTRATION_ORCHESTRATOR_HPP
#define MECSIM_ORCHESTRATION_ORCHESTRATOR_HPP

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "mecsim/mechost/mec_host.hpp"
#include "mecsim/orchestration/app_context.hpp"

namespace mecsim {

// First host in managedHosts order running every required service and with
// room for the compute demand. Throws NoSuitableHost.
MecHost* selectMecHost(const AppDescriptor& descriptor,
                       const std::vector<MecHost*>& managedHosts);

struct CreateContextRequest {
    std::string appDId;
    std::string appName;            // alternative lookup key
    std::string appPackageSource;   // descriptor loaded on demand
    std::string deviceAppId;
    std::string callbackReference;
};

// MEC system level: onboarding, host selection, MEC app lifecycle. Talks to
// the UALCMP via kernel messages ("orch.*") and to MEC hosts via direct
// method calls. Lifecycle completion is delayed by the configured
// processing-delay timer.
class Orchestrator : public Node {
public:
    using PackageLoader = std::function<AppDescriptor(const std::string& path)>;

    Orchestrator(Simulator& sim, NodeId id, std::vector<MecHost*> managedHosts,
                 double processingDelay);

    void setPackageLoader(PackageLoader loader) { loader_ = std::move(loader); }
    void setAppFactory(const std::string& appName, MecAppFactory factory) {
        factories_[appName] = std::move(factory);
    }
    void setDefaultAppFactory(MecAppFactory factory) {
        defaultFactory_ = std::move(factory);
    }

    // Emits a RESOURCE_SNAPSHOT log record per managed host.
    void snapshotHosts();

    const std::vector<MecHost*>& managedHosts() const { return managedHosts_; }
    const std::map<std::string, AppDescriptor>& onboarded() const {
        return onboarded_;
    }
    const std::map<std::string, AppContext>& contexts() const { return contexts_; }
    double processingDelay() const { return processingDelay_; }

    // Throws DuplicateAppDId.
    std::string onboardAppPackage(const AppDescriptor& descriptor);

    void onMessage(Simulator& sim, const Message& msg) override;

    // Direct lifecycle API (the message path wraps these). The callback fires
    // once the processing-delay timer expires, with the final context.
    using ContextCallback = std::function<void(const AppContext&)>;
    std::string createAppContext(const CreateContextRequest& request,
                                 ContextCallback onDone);
    void deleteAppContext(const std::string& contextId, ContextCallback onDone);

private:
    void finishCreate(const std::string& contextId, ContextCallback onDone);
    void finishDelete(const std::string& contextId, ContextCallback onDone);
    const AppDescriptor* resolveDescriptor(const AppContext& ctx);

    Simulator& sim_;
    std::vector<MecHost*> managedHosts_;
    double processingDelay_;
    std::map<std::string, AppDescriptor> onboarded_; // appDId -> descriptor
    std::map<std::string, AppContext> contexts_;
    std::map<std::string, MecAppFactory> factories_;
    MecAppFactory defaultFactory_;
    PackageLoader loader_;
    uint64_t nextContextId_ = 1;
    uint64_t nextInstanceId_ = 1;
};

} // namespace mecsim

#endif
