#include "mecsim/descriptors/scenario.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace mecsim {

namespace {

using nlohmann::json;

Vec2 vec2At(const json& arr, const std::string& what) {
    if (!arr.is_array() || arr.size() != 2 || !arr[0].is_number() || !arr[1].is_number())
        throw BadValueError(what + " must be a [x, y] number pair");
    return {arr[0].get<double>(), arr[1].get<double>()};
}

int64_t quantity(const json& v, const std::string& what) {
    if (v.is_string())
        return parseQuantity(v.get<std::string>());
    if (v.is_number()) {
        double d = v.get<double>();
        if (d < 0)
            throw BadValueError(what + " is negative");
        return static_cast<int64_t>(d);
    }
    throw BadValueError(what + " must be a number or quantity string");
}

ResourceVector budgetFrom(const json& obj, const std::string& what) {
    for (const char* f : {"ram", "disk", "cpu"})
        if (!obj.contains(f))
            throw MissingFieldError(what + "." + f);
    return {quantity(obj.at("ram"), what + ".ram"),
            quantity(obj.at("disk"), what + ".disk"),
            quantity(obj.at("cpu"), what + ".cpu")};
}

Endpoint endpointFrom(const json& obj, const std::string& what) {
    if (!obj.contains("address") || !obj.contains("port"))
        throw MissingFieldError(what + ".address/port");
    int64_t port = obj.at("port").get<int64_t>();
    if (port < 1 || port > 65535)
        throw BadValueError(what + ".port out of range");
    return {obj.at("address").get<std::string>(), static_cast<uint16_t>(port)};
}

// The reference platform writes the host list as a space-separated string;
// both that and a JSON array are accepted.
std::vector<std::string> hostListFrom(const json& v) {
    std::vector<std::string> out;
    if (v.is_string()) {
        std::istringstream in(v.get<std::string>());
        std::string tok;
        while (in >> tok)
            out.push_back(tok);
    } else if (v.is_array()) {
        for (const auto& s : v)
            out.push_back(s.get<std::string>());
    } else {
        throw BadValueError("mecHostsList must be an array or space-separated string");
    }
    return out;
}

} // namespace

ScenarioConfig parseScenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw BadValueError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw BadValueError("scenario must be a JSON object");

    ScenarioConfig cfg;
    cfg.seed = doc.value("seed", 0ULL);
    cfg.mobilityStep = doc.value("mobilityStep", 0.1);
    if (cfg.mobilityStep <= 0)
        throw BadValueError("mobilityStep must be > 0");
    cfg.cellRange = doc.value("cellRange", 1000.0);
    if (cfg.cellRange <= 0)
        throw BadValueError("cellRange must be > 0");

    std::set<std::string> hostNames;
    for (const auto& h : doc.value("hosts", json::array())) {
        MecHostConfig host;
        if (!h.contains("name"))
            throw MissingFieldError("hosts[].name");
        host.name = h.at("name").get<std::string>();
        if (!hostNames.insert(host.name).second)
            throw DuplicateNameError("duplicate host name: " + host.name);
        if (!h.contains("budget"))
            throw MissingFieldError("hosts[].budget");
        host.budget = budgetFrom(h.at("budget"), "hosts[].budget");
        for (const auto& s : h.value("services", json::array()))
            host.services.push_back(s.get<std::string>());
        std::string paradigm = h.value("paradigm", "segregation");
        if (paradigm == "segregation")
            host.paradigm = SharingParadigm::Segregation;
        else if (paradigm == "fairSharing")
            host.paradigm = SharingParadigm::FairSharing;
        else
            throw BadValueError("unknown paradigm: " + paradigm);
        host.linkLatency = h.value("linkLatency", 0.0);
        if (host.linkLatency < 0)
            throw BadValueError("linkLatency must be >= 0");
        host.address = h.value("address", "");
        cfg.hosts.push_back(std::move(host));
    }

    if (doc.contains("orchestrator")) {
        const auto& o = doc.at("orchestrator");
        if (o.contains("mecHostsList"))
            cfg.orchestrator.mecHostsList = hostListFrom(o.at("mecHostsList"));
        for (const auto& p : o.value("onboardedPackages", json::array()))
            cfg.orchestrator.onboardedPackages.push_back(p.get<std::string>());
        cfg.orchestrator.processingDelay = o.value("processingDelay", 0.0);
        if (cfg.orchestrator.processingDelay < 0)
            throw BadValueError("processingDelay must be >= 0");
    }
    if (cfg.orchestrator.mecHostsList.empty()) {
        // default: orchestrator manages every declared host
        for (const auto& h : cfg.hosts)
            cfg.orchestrator.mecHostsList.push_back(h.name);
    }

    for (const auto& name : cfg.orchestrator.mecHostsList)
        if (!hostNames.count(name))
            throw UnknownHostError("mecHostsList references undeclared host: " + name);

    if (doc.contains("ualcmp"))
        cfg.ualcmpLinkLatency = doc.at("ualcmp").value("linkLatency", 0.0);

    std::set<std::string> gnbIds;
    for (const auto& g : doc.value("gnbs", json::array())) {
        GnbConfig gnb;
        gnb.id = g.at("id").get<std::string>();
        if (!gnbIds.insert(gnb.id).second)
            throw DuplicateNameError("duplicate gnb id: " + gnb.id);
        gnb.position = vec2At(g.at("position"), "gnbs[].position");
        cfg.gnbs.push_back(gnb);
    }

    std::set<std::string> ueNames;
    for (const auto& u : doc.value("ues", json::array())) {
        UeConfig ue;
        ue.name = u.at("name").get<std::string>();
        if (!ueNames.insert(ue.name).second)
            throw DuplicateNameError("duplicate ue name: " + ue.name);
        ue.position = vec2At(u.at("position"), "ues[].position");
        if (u.contains("velocity"))
            ue.velocity = vec2At(u.at("velocity"), "ues[].velocity");
        ue.linkLatency = u.value("linkLatency", 0.0);
        ue.address = u.value("address", "");
        for (const auto& a : u.value("apps", json::array())) {
            UeAppConfig app;
            app.appName = a.value("appName", "");
            if (a.contains("appPackageSource"))
                app.appPackageSource = a.at("appPackageSource").get<std::string>();
            if (app.appName.empty() && !app.appPackageSource)
                throw MissingFieldError("ues[].apps[].appName or appPackageSource");
            app.startTime = a.value("startTime", 0.0);
            if (a.contains("stopTime"))
                app.stopTime = a.at("stopTime").get<double>();
            ue.apps.push_back(std::move(app));
        }
        cfg.ues.push_back(std::move(ue));
    }

    for (const auto& z : doc.value("dangerZones", json::array())) {
        DangerZone zone;
        zone.center = vec2At(z.at("center"), "dangerZones[].center");
        zone.radius = z.at("radius").get<double>();
        if (zone.radius <= 0)
            throw BadValueError("dangerZones[].radius must be > 0");
        cfg.dangerZones.push_back(zone);
    }

    if (doc.contains("warningAlertApp")) {
        cfg.warningAlert.computeInstructions =
            doc.at("warningAlertApp").value("computeInstructions", int64_t{0});
        if (cfg.warningAlert.computeInstructions < 0)
            throw BadValueError("computeInstructions must be >= 0");
    }

    if (doc.contains("nat")) {
        const auto& n = doc.at("nat");
        NatConfig nat;
        nat.address = n.value("address", "");
        std::set<std::pair<std::string, uint16_t>> seen;
        for (const auto& r : n.value("rules", json::array())) {
            NatRule rule;
            rule.externalAddr = endpointFrom(r.at("external"), "nat.rules[].external");
            rule.internalAddr = endpointFrom(r.at("internal"), "nat.rules[].internal");
            if (!seen.insert({rule.externalAddr.address, rule.externalAddr.port}).second)
                throw DuplicateNameError("duplicate NAT external endpoint " +
                                         rule.externalAddr.str());
            nat.rules.push_back(rule);
        }
        cfg.nat = std::move(nat);
    }

    for (const auto& b : doc.value("bridges", json::array())) {
        BridgeConfig bridge;
        bridge.mode = b.value("mode", "udpDatagram");
        if (bridge.mode != "udpDatagram" && bridge.mode != "httpClient")
            throw BadValueError("unknown bridge mode: " + bridge.mode);
        bridge.bindAddress = b.value("bindAddress", "127.0.0.1");
        bridge.bindPort = static_cast<uint16_t>(b.value("bindPort", 0));
        cfg.bridges.push_back(bridge);
    }

    return cfg;
}

} // namespace mecsim
