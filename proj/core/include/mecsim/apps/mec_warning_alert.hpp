#ifndef MECSIM_APPS_MEC_WARNING_ALERT_HPP
#define MECSIM_APPS_MEC_WARNING_ALERT_HPP

#include <optional>

#include "mecsim/apps/wire.hpp"
#include "mecsim/geometry.hpp"
#include "mecsim/mechost/mec_host.hpp"

namespace mecsim {

// MEC-side WarningAlert app: discovers the Location service via the Mp1
// registry, subscribes a circle zone for the UE that announces itself, and
// relays entering/leaving notifications to the UE app as WARNING_ALERT /
// ZONE_EXIT datagrams. Each notification optionally costs a configurable
// instruction count through the VIM delay model.
class MecWarningAlertApp : public MecAppBase {
public:
    MecWarningAlertApp(Vec2 zoneCenter, double zoneRadius,
                       int64_t computeInstructions = 0)
        : zoneCenter_(zoneCenter), zoneRadius_(zoneRadius),
          computeInstructions_(computeInstructions) {}

    void start(Simulator& sim) override;
    void stop(Simulator& sim) override;
    void onMessage(Simulator& sim, const Message& msg) override;

    bool locationServiceFound() const { return locationEndpoint_.has_value(); }

private:
    void discoverLocationService(Simulator& sim);
    void subscribe(Simulator& sim);
    void handleNotification(Simulator& sim, const nlohmann::json& body);
    void sendToUe(Simulator& sim, WireFields fields);

    Vec2 zoneCenter_;
    double zoneRadius_;
    int64_t computeInstructions_;
    std::optional<Endpoint> locationEndpoint_;
    std::optional<Endpoint> ueEndpoint_;
    std::string ueId_;
    std::string subscriptionId_;
    bool startPending_ = false;
};

} // namespace mecsim

#endif
