#include "mecsim/apps/mec_warning_alert.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

void MecWarningAlertApp::start(Simulator& sim) {
    discoverLocationService(sim);
}

void MecWarningAlertApp::stop(Simulator&) {
    // host drops the port binding; pending compute jobs are cancelled by the VIM
}

void MecWarningAlertApp::discoverLocationService(Simulator& sim) {
    Message req;
    req.kind = "http.request";
    req.data = {{"method", "GET"},
                {"target",
                 "/mec_service_mgmt/v1/services?ser_name=LocationService"},
                {"body", ""},
                {"requestId", "discover"}};
    req.src = endpoint();
    req.dst = {host()->address(), kRegistryPort};
    sim.sendDatagram(host()->id(), std::move(req));
}

void MecWarningAlertApp::subscribe(Simulator& sim) {
    nlohmann::ordered_json body{
        {"center", {zoneCenter_.x, zoneCenter_.y}},
        {"radius", zoneRadius_},
        {"trackedUe", ueId_},
        {"trigger", "both"},
        {"callback", {{"address", endpoint().address}, {"port", endpoint().port}}}};
    Message req;
    req.kind = "http.request";
    req.data = {{"method", "POST"},
                {"target", "/location/v2/subscriptions/area/circle"},
                {"body", body.dump()},
                {"requestId", "subscribe"}};
    req.src = endpoint();
    req.dst = *locationEndpoint_;
    sim.sendDatagram(host()->id(), std::move(req));
}

void MecWarningAlertApp::sendToUe(Simulator& sim, WireFields fields) {
    Message out;
    out.kind = "app.datagram";
    out.data = {{"payload", encodeWire(fields)}};
    out.src = endpoint();
    out.dst = *ueEndpoint_;
    sim.sendDatagram(host()->id(), std::move(out));
}

void MecWarningAlertApp::handleNotification(Simulator& sim,
                                            const nlohmann::json& body) {
    if (!ueEndpoint_)
        return;
    std::string event = body.value("event", "");
    WireFields fields;
    if (event == "entering") {
        fields = {{"kind", "WARNING_ALERT"},
                  {"ueId", body.value("ueId", "")},
                  {"positionX", std::to_string(body.at("position").at(0).get<double>())},
                  {"positionY", std::to_string(body.at("position").at(1).get<double>())},
                  {"timestamp", std::to_string(body.value("timestamp", 0.0))}};
    } else if (event == "leaving") {
        fields = {{"kind", "ZONE_EXIT"},
                  {"ueId", body.value("ueId", "")},
                  {"timestamp", std::to_string(body.value("timestamp", 0.0))}};
    } else {
        return;
    }

    if (computeInstructions_ > 0) {
        host()->executeInstructions(appInstanceId(), computeInstructions_,
                                    [this, &sim, fields] {
                                        sendToUe(sim, fields);
                                    });
    } else {
        sendToUe(sim, std::move(fields));
    }
}

void MecWarningAlertApp::onMessage(Simulator& sim, const Message& msg) {
    if (msg.kind == "http.response") {
        std::string requestId = msg.data.value("requestId", "");
        if (requestId == "discover") {
            auto body = nlohmann::json::parse(msg.data.value("body", "[]"));
            if (!body.is_array() || body.empty()) {
                sim.log(host()->id(), "MECAPP_ERROR",
                        {{"appInstanceId", appInstanceId()},
                         {"reason", "LocationService not found on host"}});
                return;
            }
            const auto& ep = body.at(0).at("transportInfo").at("endpoint");
            locationEndpoint_ = Endpoint{
                ep.at("host").get<std::string>(),
                static_cast<uint16_t>(ep.at("port").get<int>())};
            if (startPending_) {
                startPending_ = false;
                subscribe(sim);
            }
        } else if (requestId == "subscribe") {
            auto body = nlohmann::json::parse(msg.data.value("body", "{}"));
            subscriptionId_ = body.value("subscriptionId", "");
            sim.log(host()->id(), "MECAPP_SUBSCRIBED",
                    {{"appInstanceId", appInstanceId()},
                     {"subscriptionId", subscriptionId_},
                     {"ueId", ueId_}});
        }
        return;
    }

    if (msg.kind == "http.request") {
        // circle-zone notification callback from the Location service
        nlohmann::json body;
        try {
            body = nlohmann::json::parse(msg.data.value("body", "{}"));
        } catch (const nlohmann::json::parse_error&) {
            return;
        }
        handleNotification(sim, body);
        return;
    }

    if (msg.kind == "app.datagram") {
        auto fields = decodeWire(msg.data.value("payload", ""));
        if (fields.count("kind") && fields["kind"] == "START") {
            ueId_ = fields["ueId"];
            ueEndpoint_ = Endpoint{
                fields["address"],
                static_cast<uint16_t>(std::stoi(fields["port"]))};
            if (locationEndpoint_)
                subscribe(sim);
            else
                startPending_ = true;
        }
    }
}

} // namespace mecsim
