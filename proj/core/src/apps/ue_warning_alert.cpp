#include "mecsim/apps/ue_warning_alert.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

void UeWarningAlertApp::start(Simulator& sim) {
    sim.scheduleAt(startTime_, [this, &sim] {
        WireFields fields{{"kind", "CREATE_APP"}, {"appName", mecAppName_}};
        if (appPackageSource_)
            fields.push_back({"appPackageSource", *appPackageSource_});
        sim.log(node_, "UE_CREATE_APP", {{"appName", mecAppName_}});
        sendToDeviceApp(sim, std::move(fields));
    });
}

void UeWarningAlertApp::sendToDeviceApp(Simulator& sim, WireFields fields) {
    Message out;
    out.kind = "app.datagram";
    out.data = {{"payload", encodeWire(fields)}};
    out.src = endpoint();
    out.dst = {address_, kDeviceAppPort};
    sim.sendDatagram(node_, std::move(out));
}

void UeWarningAlertApp::onMessage(Simulator& sim, const Message& msg) {
    if (msg.kind != "app.datagram")
        return;
    auto fields = decodeWire(msg.data.value("payload", ""));
    std::string kind = fields.count("kind") ? fields["kind"] : "";

    if (kind == "ACK_CREATE_APP") {
        if (fields["result"] == "ok") {
            mecAppEndpoint_ = Endpoint{
                fields["address"],
                static_cast<uint16_t>(std::stoi(fields["port"]))};
            sim.log(node_, "UE_CREATE_ACK",
                    {{"result", "ok"}, {"endpoint", mecAppEndpoint_->str()}});

            // announce the UE data-plane endpoint to the MEC app
            Message hello;
            hello.kind = "app.datagram";
            hello.data = {{"payload",
                           encodeWire({{"kind", "START"},
                                       {"ueId", ueId_},
                                       {"address", address_},
                                       {"port", std::to_string(port_)}})}};
            hello.src = endpoint();
            hello.dst = *mecAppEndpoint_;
            sim.sendDatagram(node_, std::move(hello));

            if (stopTime_ && *stopTime_ > sim.now()) {
                sim.scheduleAt(*stopTime_, [this, &sim] {
                    sim.log(node_, "UE_DELETE_APP", {{"appName", mecAppName_}});
                    sendToDeviceApp(sim, {{"kind", "DELETE_APP"},
                                          {"appName", mecAppName_}});
                });
            }
        } else {
            sim.log(node_, "UE_CREATE_ACK",
                    {{"result", "fail"}, {"reason", fields["reason"]}});
        }
    } else if (kind == "ACK_DELETE_APP") {
        sim.log(node_, "UE_DELETE_ACK", {{"result", fields["result"]}});
        mecAppEndpoint_.reset();
    } else if (kind == "WARNING_ALERT") {
        ++alertsReceived_;
        double sentAt = fields.count("timestamp") ? std::stod(fields["timestamp"]) : 0;
        sim.log(node_, "WARNING_ALERT",
                {{"ueId", fields["ueId"]},
                 {"positionX", fields["positionX"]},
                 {"positionY", fields["positionY"]},
                 {"notificationTime", sentAt},
                 {"latency", sim.now() - sentAt}});
    } else if (kind == "ZONE_EXIT") {
        sim.log(node_, "ZONE_EXIT", {{"ueId", fields["ueId"]}});
    }
}

} // namespace mecsim
