#ifndef MECSIM_APPS_UE_WARNING_ALERT_HPP
#define MECSIM_APPS_UE_WARNING_ALERT_HPP

#include <optional>

#include "mecsim/apps/ue_node.hpp"
#include "mecsim/apps/wire.hpp"

namespace mecsim {

class Simulator;

// UE-side WarningAlert app: asks the Device app to instantiate the MEC app at
// startTime, announces itself to the MEC app with a START datagram, logs
// every WARNING_ALERT / ZONE_EXIT it receives, and tears the context down at
// stopTime.
class UeWarningAlertApp : public PortHandler {
public:
    UeWarningAlertApp(NodeId node, std::string address, std::string ueId,
                      std::string mecAppName, double startTime,
                      std::optional<double> stopTime,
                      std::optional<std::string> appPackageSource = std::nullopt,
                      uint16_t port = kUeAppPort)
        : node_(std::move(node)), address_(std::move(address)),
          ueId_(std::move(ueId)), mecAppName_(std::move(mecAppName)),
          startTime_(startTime), stopTime_(stopTime),
          appPackageSource_(std::move(appPackageSource)), port_(port) {}

    // Schedules the CREATE_APP trigger; call once after wiring.
    void start(Simulator& sim);

    void onMessage(Simulator& sim, const Message& msg) override;

    Endpoint endpoint() const { return {address_, port_}; }
    const std::optional<Endpoint>& mecAppEndpoint() const { return mecAppEndpoint_; }
    int alertsReceived() const { return alertsReceived_; }

private:
    void sendToDeviceApp(Simulator& sim, WireFields fields);

    NodeId node_;
    std::string address_;
    std::string ueId_;
    std::string mecAppName_;
    double startTime_;
    std::optional<double> stopTime_;
    std::optional<std::string> appPackageSource_;
    uint16_t port_ = kUeAppPort;
    std::optional<Endpoint> mecAppEndpoint_;
    int alertsReceived_ = 0;
};

} // namespace mecsim

#endif
