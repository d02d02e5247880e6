#ifndef MECSIM_DESCRIPTORS_SCENARIO_HPP
#define MECSIM_DESCRIPTORS_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mecsim/geometry.hpp"
#include "mecsim/descriptors/resource_vector.hpp"
#include "mecsim/kernel/message.hpp"

namespace mecsim {

enum class SharingParadigm { Segregation, FairSharing };

struct MecHostConfig {
    std::string name;
    ResourceVector budget;
    std::vector<std::string> services;
    SharingParadigm paradigm = SharingParadigm::Segregation;
    double linkLatency = 0;   // attachment to the core node, seconds
    std::string address;      // base address; defaulted if empty
};

struct OrchestratorConfig {
    std::vector<std::string> mecHostsList;
    std::vector<std::string> onboardedPackages; // descriptor file paths
    double processingDelay = 0;
};

struct UeAppConfig {
    std::string appName;                       // onboarded appName, or
    std::optional<std::string> appPackageSource; // descriptor path loaded on demand
    double startTime = 0;
    std::optional<double> stopTime;
};

struct UeConfig {
    std::string name;
    Vec2 position;
    Vec2 velocity;
    double linkLatency = 0;
    std::string address;
    std::vector<UeAppConfig> apps;
};

struct GnbConfig {
    std::string id;
    Vec2 position;
};

struct DangerZone {
    Vec2 center;
    double radius = 0;
};

struct NatRule {
    Endpoint externalAddr;
    Endpoint internalAddr;
};

struct NatConfig {
    std::string address;
    std::vector<NatRule> rules;
};

struct BridgeConfig {
    std::string mode = "udpDatagram"; // or "httpClient"
    std::string bindAddress = "127.0.0.1";
    uint16_t bindPort = 0;
};

struct WarningAlertParams {
    int64_t computeInstructions = 0; // per notification, via the VIM delay model
};

struct ScenarioConfig {
    uint64_t seed = 0;
    double mobilityStep = 0.1;
    double cellRange = 1000;
    std::vector<MecHostConfig> hosts;
    OrchestratorConfig orchestrator;
    double ualcmpLinkLatency = 0;
    std::vector<GnbConfig> gnbs;
    std::vector<UeConfig> ues;
    std::vector<DangerZone> dangerZones;
    WarningAlertParams warningAlert;
    std::optional<NatConfig> nat;
    std::vector<BridgeConfig> bridges;

    bool declaresExternalTraffic() const { return !bridges.empty(); }
    const MecHostConfig* findHost(const std::string& name) const {
        for (const auto& h : hosts)
            if (h.name == name)
                return &h;
        return nullptr;
    }
};

// Strict parse: throws UnknownHost / DuplicateName / MissingField / BadValue.
ScenarioConfig parseScenario(const std::string& text);

} // namespace mecsim

#endif
