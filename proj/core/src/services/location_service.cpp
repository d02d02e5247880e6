#include "mecsim/services/location_service.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

namespace {
const std::string kUsersPath = "/location/v2/queries/users";
const std::string kCirclePath = "/location/v2/subscriptions/area/circle";
} // namespace

nlohmann::ordered_json LocationService::getUserLocation(
    Simulator& sim, const std::string& ueId) const {
    const UeState& ue = mobility_->ue(ueId); // throws UnknownUe
    return {{"address", ue.ueId},
            {"position", {ue.position.x, ue.position.y}},
            {"timestamp", sim.now()}};
}

std::string LocationService::subscribeCircle(CircleSubscription sub) {
    if (sub.radius <= 0)
        throw BadRadiusError("circle radius must be > 0");
    if (sub.trackedUe.empty())
        sub.trackedUe = "all";
    if (sub.subscriptionId.empty())
        sub.subscriptionId = "circle-" + std::to_string(nextSubId_++);

    // seed lastInside from current positions: transition-only semantics
    sub.lastInside.clear();
    for (const auto& [ueId, ue] : mobility_->ues()) {
        if (sub.trackedUe != "all" && sub.trackedUe != ueId)
            continue;
        sub.lastInside[ueId] = distance(ue.position, sub.center) <= sub.radius;
    }
    std::string id = sub.subscriptionId;
    subscriptions_[id] = std::move(sub);
    return id;
}

void LocationService::unsubscribe(const std::string& subscriptionId) {
    if (!subscriptions_.erase(subscriptionId))
        throw UnknownSubscriptionError("no such subscription: " + subscriptionId);
}

void LocationService::evaluateSubscriptions(Simulator& sim) {
    for (auto& [id, sub] : subscriptions_) {
        for (const auto& [ueId, ue] : mobility_->ues()) {
            if (sub.trackedUe != "all" && sub.trackedUe != ueId)
                continue;
            bool inside = distance(ue.position, sub.center) <= sub.radius;
            auto it = sub.lastInside.find(ueId);
            bool was = (it != sub.lastInside.end()) ? it->second : false;
            sub.lastInside[ueId] = inside;
            if (inside == was)
                continue;
            const char* event = inside ? "entering" : "leaving";
            if (sub.trigger == "both" || sub.trigger == event)
                notify(sim, sub, ue, event);
        }
    }
}

void LocationService::notify(Simulator& sim, const CircleSubscription& sub,
                             const UeState& ue, const std::string& event) {
    nlohmann::ordered_json body{{"subscriptionId", sub.subscriptionId},
                                {"ueId", ue.ueId},
                                {"event", event},
                                {"position", {ue.position.x, ue.position.y}},
                                {"timestamp", sim.now()}};
    sim.log(hostNode(), "LOC_NOTIFICATION",
            {{"subscriptionId", sub.subscriptionId},
             {"ueId", ue.ueId},
             {"event", event}});
    Message msg;
    msg.kind = "http.request";
    msg.data = {{"method", "POST"},
                {"target", "/notifications"},
                {"body", body.dump()},
                {"requestId", ""}};
    msg.src = endpoint();
    msg.dst = sub.callback;
    sim.sendDatagram(hostNode(), std::move(msg));
}

HttpResponse LocationService::handleRequest(Simulator& sim, const HttpRequest& req) {
    if (req.method == "GET" && req.path == kUsersPath) {
        auto address = req.queryParam("address");
        if (!address)
            return HttpResponse::error(400, "missing address query parameter");
        try {
            return HttpResponse::json(
                200, {{"userInfo", getUserLocation(sim, *address)}});
        } catch (const UnknownUeError& e) {
            return HttpResponse::error(404, e.what());
        }
    }

    if (req.method == "POST" && req.path == kCirclePath) {
        nlohmann::json body;
        try {
            body = nlohmann::json::parse(req.body);
        } catch (const nlohmann::json::parse_error&) {
            return HttpResponse::error(400, "malformed JSON body");
        }
        CircleSubscription sub;
        try {
            const auto& center = body.at("center");
            sub.center = {center.at(0).get<double>(), center.at(1).get<double>()};
            sub.radius = body.at("radius").get<double>();
            sub.trackedUe = body.value("trackedUe", "all");
            sub.trigger = body.value("trigger", "entering");
            const auto& cb = body.at("callback");
            sub.callback = {cb.at("address").get<std::string>(),
                            static_cast<uint16_t>(cb.at("port").get<int>())};
        } catch (const nlohmann::json::exception& e) {
            return HttpResponse::error(400, std::string("bad subscription: ") + e.what());
        }
        try {
            std::string id = subscribeCircle(std::move(sub));
            return HttpResponse::json(201, {{"subscriptionId", id}});
        } catch (const BadRadiusError& e) {
            return HttpResponse::error(400, e.what());
        }
    }

    if (req.method == "DELETE" && req.path.rfind(kCirclePath + "/", 0) == 0) {
        std::string id = req.path.substr(kCirclePath.size() + 1);
        try {
            unsubscribe(id);
            return HttpResponse{204, ""};
        } catch (const UnknownSubscriptionError& e) {
            return HttpResponse::error(404, e.what());
        }
    }

    return HttpResponse::error(404, "unknown route " + req.path);
}

} // namespace mecsim
