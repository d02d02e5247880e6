#ifndef MECSIM_RUNNER_WORLD_HPP
#define MECSIM_RUNNER_WORLD_HPP

#include <memory>

#include "mecsim/apps/bridge.hpp"
#include "mecsim/apps/device_app.hpp"
#include "mecsim/apps/mec_warning_alert.hpp"
#include "mecsim/apps/nat.hpp"
#include "mecsim/apps/ue_warning_alert.hpp"
#include "mecsim/kernel/sim.hpp"
#include "mecsim/orchestration/orchestrator.hpp"
#include "mecsim/orchestration/ualcmp.hpp"
#include "mecsim/runner/event_log.hpp"
#include "mecsim/services/location_service.hpp"
#include "mecsim/services/rnis_service.hpp"

namespace mecsim {

// Composes a full simulated MEC system from a scenario: transport graph,
// MEC hosts with their platform services, orchestrator + UALCMP, UEs with
// Device and WarningAlert apps, and the optional NAT router and bridges.
class World {
public:
    World(const ScenarioConfig& config, ClockMode mode, std::string baseDir,
          EventLog* log);
    ~World();

    Simulator& sim() { return sim_; }
    Orchestrator& orchestrator() { return *orchestrator_; }
    const std::vector<std::unique_ptr<MecHost>>& hosts() const { return hosts_; }
    MecHost* host(const std::string& name);
    std::shared_ptr<MobilityModel> mobility() { return mobility_; }
    const std::vector<std::unique_ptr<UeWarningAlertApp>>& ueApps() const {
        return ueApps_;
    }
    Ualcmp& ualcmp() { return *ualcmp_; }
    const std::vector<std::unique_ptr<UdpBridge>>& bridges() const {
        return bridges_;
    }

    // Schedules mobility stepping up to `until`, starts the UE apps, and
    // attaches bridges (realtime mode).
    void start(double until);

private:
    void buildTransport(const ScenarioConfig& config);
    void scheduleMobilityStep(uint64_t stepIndex, double until);
    AppDescriptor loadPackage(const std::string& path) const;

    ScenarioConfig config_;
    std::string baseDir_;
    Simulator sim_;
    std::shared_ptr<MobilityModel> mobility_;
    std::vector<std::unique_ptr<MecHost>> hosts_;
    std::vector<LocationService*> locationServices_;
    std::unique_ptr<Orchestrator> orchestrator_;
    std::unique_ptr<Ualcmp> ualcmp_;
    std::vector<std::unique_ptr<UeNode>> ueNodes_;
    std::vector<std::unique_ptr<DeviceApp>> deviceApps_;
    std::vector<std::unique_ptr<UeWarningAlertApp>> ueApps_;
    std::unique_ptr<NatRouter> nat_;
    std::vector<std::unique_ptr<UdpBridge>> bridges_;
};

} // namespace mecsim

#endif
