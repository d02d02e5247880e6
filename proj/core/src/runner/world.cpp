#include "mecsim/runner/world.hpp"

#include <fstream>
#include <sstream>

namespace mecsim {

namespace {
const NodeId kCoreNode = "cn";
const NodeId kUalcmpNode = "ualcmp";
const NodeId kOrchestratorNode = "orchestrator";
const NodeId kNatNode = "natRouter";
} // namespace

World::World(const ScenarioConfig& config, ClockMode mode, std::string baseDir,
             EventLog* log)
    : config_(config), baseDir_(std::move(baseDir)), sim_(mode) {
    if (log)
        sim_.setLogger([log](SimTime t, const std::string& node,
                             const std::string& kind,
                             const nlohmann::json& attrs) {
            log->append(t, node, kind, attrs);
        });

    mobility_ = std::make_shared<MobilityModel>(config_.gnbs, config_.cellRange);
    for (const auto& ue : config_.ues)
        mobility_->addUe(ue.name, ue.position, ue.velocity);

    // MEC hosts with their platform services
    std::size_t hostIdx = 0;
    for (auto& hostCfg : config_.hosts) {
        std::string address = hostCfg.address.empty()
            ? "10.2." + std::to_string(hostIdx + 1) + ".1"
            : hostCfg.address;
        auto host = std::make_unique<MecHost>(sim_, hostCfg.name, address,
                                              hostCfg.budget, hostCfg.paradigm);
        for (const auto& serName : hostCfg.services) {
            if (serName == "LocationService") {
                auto svc = std::make_unique<LocationService>(
                    Endpoint{address, kLocationServicePort}, mobility_);
                locationServices_.push_back(svc.get());
                host->addPlatformService(std::move(svc), kLocationServicePort);
            } else if (serName == "RNIService") {
                host->addPlatformService(
                    std::make_unique<RnisService>(Endpoint{address, kRnisPort},
                                                  mobility_),
                    kRnisPort);
            } else {
                throw BadValueError("unknown platform service: " + serName);
            }
        }
        hosts_.push_back(std::move(host));
        ++hostIdx;
    }

    // orchestrator managing the configured subset, in list order
    std::vector<MecHost*> managed;
    for (const auto& name : config_.orchestrator.mecHostsList)
        managed.push_back(host(name));
    orchestrator_ = std::make_unique<Orchestrator>(
        sim_, kOrchestratorNode, managed, config_.orchestrator.processingDelay);
    orchestrator_->setPackageLoader(
        [this](const std::string& path) { return loadPackage(path); });
    if (!config_.dangerZones.empty()) {
        const DangerZone zone = config_.dangerZones.front();
        int64_t instructions = config_.warningAlert.computeInstructions;
        orchestrator_->setDefaultAppFactory(
            [zone, instructions](const AppDescriptor&) {
                return std::make_unique<MecWarningAlertApp>(zone.center,
                                                            zone.radius,
                                                            instructions);
            });
    }
    for (const auto& path : config_.orchestrator.onboardedPackages)
        orchestrator_->onboardAppPackage(loadPackage(path));

    ualcmp_ = std::make_unique<Ualcmp>(kUalcmpNode, "10.1.0.1", kOrchestratorNode);

    // UEs: transport node + Device app + per-app UE client
    std::size_t ueIdx = 0;
    for (auto& ueCfg : config_.ues) {
        std::string address = ueCfg.address.empty()
            ? "10.0.0." + std::to_string(ueIdx + 1)
            : ueCfg.address;
        auto node = std::make_unique<UeNode>(ueCfg.name, address);
        auto deviceApp = std::make_unique<DeviceApp>(
            node->id(), address, ueCfg.name, ualcmp_->endpoint());
        node->bindPort(kDeviceAppPort, deviceApp.get());
        uint16_t port = kUeAppPort;
        for (const auto& appCfg : ueCfg.apps) {
            auto app = std::make_unique<UeWarningAlertApp>(
                node->id(), address, ueCfg.name, appCfg.appName,
                appCfg.startTime, appCfg.stopTime, appCfg.appPackageSource, port);
            node->bindPort(port, app.get());
            ueApps_.push_back(std::move(app));
            ++port;
        }
        deviceApps_.push_back(std::move(deviceApp));
        ueNodes_.push_back(std::move(node));
        ++ueIdx;
    }

    if (config_.nat)
        nat_ = std::make_unique<NatRouter>(kNatNode, config_.nat->rules);

    std::size_t bridgeIdx = 0;
    for (const auto& bridgeCfg : config_.bridges) {
        bridges_.push_back(std::make_unique<UdpBridge>(
            "bridge" + std::to_string(bridgeIdx++), bridgeCfg));
    }

    buildTransport(config_);
}

World::~World() {
    for (auto& bridge : bridges_)
        bridge->detach();
}

void World::buildTransport(const ScenarioConfig& config) {
    auto& transport = sim_.transport();

    for (std::size_t i = 0; i < hosts_.size(); ++i) {
        sim_.addNode(hosts_[i].get());
        transport.addLink({hosts_[i]->id(), kCoreNode, config.hosts[i].linkLatency});
        transport.bindAddress(hosts_[i]->address(), hosts_[i]->id());
    }

    sim_.addNode(ualcmp_.get());
    transport.addLink({kUalcmpNode, kCoreNode, config.ualcmpLinkLatency});
    transport.bindAddress(ualcmp_->address(), kUalcmpNode);

    sim_.addNode(orchestrator_.get());
    transport.addLink({kOrchestratorNode, kUalcmpNode, 0});

    for (std::size_t i = 0; i < ueNodes_.size(); ++i) {
        sim_.addNode(ueNodes_[i].get());
        transport.addLink({ueNodes_[i]->id(), kCoreNode, config.ues[i].linkLatency});
        transport.bindAddress(ueNodes_[i]->address(), ueNodes_[i]->id());
    }

    if (nat_) {
        sim_.addNode(nat_.get());
        transport.addLink({kNatNode, kCoreNode, 0});
        if (!config.nat->address.empty())
            transport.bindAddress(config.nat->address, kNatNode);
    }

    for (auto& bridge : bridges_) {
        sim_.addNode(bridge.get());
        transport.addLink({bridge->id(), kCoreNode, 0});
    }
    if (!bridges_.empty())
        transport.setDefaultRoute(bridges_.front()->id());
}

AppDescriptor World::loadPackage(const std::string& path) const {
    std::string resolved = path;
    if (!path.empty() && path.front() != '/' && !baseDir_.empty())
        resolved = baseDir_ + "/" + path;
    std::ifstream in(resolved);
    if (!in.is_open())
        throw BadValueError("cannot open app package: " + resolved);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseAppDescriptor(buf.str());
}

MecHost* World::host(const std::string& name) {
    for (auto& h : hosts_)
        if (h->name() == name)
            return h.get();
    throw UnknownHostError("no such host: " + name);
}

void World::scheduleMobilityStep(uint64_t stepIndex, double until) {
    double t = static_cast<double>(stepIndex) * config_.mobilityStep;
    if (t > until)
        return;
    sim_.scheduleAt(t, [this, stepIndex, until] {
        mobility_->step(config_.mobilityStep);
        for (auto* svc : locationServices_)
            svc->evaluateSubscriptions(sim_);
        scheduleMobilityStep(stepIndex + 1, until);
    });
}

void World::start(double until) {
    sim_.log("world", "RUN_START",
             {{"seed", config_.seed},
              {"mode", sim_.mode() == ClockMode::Realtime ? "realtime" : "virtual"},
              {"until", until}});
    orchestrator_->snapshotHosts();

    for (auto& bridge : bridges_)
        bridge->attach(sim_);
    if (!config_.ues.empty())
        scheduleMobilityStep(1, until);
    for (auto& app : ueApps_)
        app->start(sim_);
}

} // namespace mecsim
