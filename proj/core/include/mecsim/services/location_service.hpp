#ifndef MECSIM_SERVICES_LOCATION_SERVICE_HPP
#define MECSIM_SERVICES_LOCATION_SERVICE_HPP

#include <map>
#include <memory>
#include <string>

#include "mecsim/mechost/service_base.hpp"
#include "mecsim/services/mobility.hpp"

namespace mecsim {

// Circle-zone subscription. Notifications fire only on inside/outside
// transitions consistent with the trigger.
struct CircleSubscription {
    std::string subscriptionId;
    Vec2 center;
    double radius = 0;
    std::string trackedUe;               // ueId, or "all"
    Endpoint callback;
    std::string trigger = "entering";    // entering | leaving | both
    std::map<std::string, bool> lastInside;
};

// Location service: position queries and circle-area subscriptions.
// Routes (minimal subset of the ETSI Location API):
//   GET    /location/v2/queries/users?address={ueId}
//   POST   /location/v2/subscriptions/area/circle
//   DELETE /location/v2/subscriptions/area/circle/{subscriptionId}
class LocationService : public MecServiceBase {
public:
    LocationService(Endpoint endpoint, std::shared_ptr<MobilityModel> mobility)
        : MecServiceBase("LocationService", std::move(endpoint)),
          mobility_(std::move(mobility)) {}

    // Direct API (the REST routes wrap these).
    nlohmann::ordered_json getUserLocation(Simulator& sim,
                                           const std::string& ueId) const;
    std::string subscribeCircle(CircleSubscription sub);
    void unsubscribe(const std::string& subscriptionId);

    // Called after every mobility step; POSTs notifications to callbacks on
    // inside/outside transitions.
    void evaluateSubscriptions(Simulator& sim);

    const std::map<std::string, CircleSubscription>& subscriptions() const {
        return subscriptions_;
    }

protected:
    HttpResponse handleRequest(Simulator& sim, const HttpRequest& req) override;

private:
    void notify(Simulator& sim, const CircleSubscription& sub,
                const UeState& ue, const std::string& event);

    std::shared_ptr<MobilityModel> mobility_;
    std::map<std::string, CircleSubscription> subscriptions_;
    uint64_t nextSubId_ = 1;
};

} // namespace mecsim

#endif
