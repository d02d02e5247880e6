#include "mecsim/descriptors/app_descriptor.hpp"

namespace mecsim {

namespace {

using nlohmann::json;

int64_t quantityField(const json& obj, const std::string& field) {
    const auto& v = obj.at(field);
    int64_t out;
    if (v.is_string())
        out = parseQuantity(v.get<std::string>());
    else if (v.is_number())
        out = static_cast<int64_t>(v.get<double>());
    else
        throw BadValueError("field '" + field + "' must be a number or quantity string");
    if (out < 0)
        throw BadValueError("field '" + field + "' is negative");
    return out;
}

void requireField(const json& obj, const std::string& name) {
    if (!obj.contains(name))
        throw MissingFieldError(name);
}

} // namespace

AppDescriptor appDescriptorFromJson(const json& doc) {
    if (!doc.is_object())
        throw BadValueError("descriptor must be a JSON object");

    AppDescriptor d;

    // the paper's prose and ETSI casing disagree; accept both on input
    if (doc.contains("appDId"))
        d.appDId = doc.at("appDId").get<std::string>();
    else if (doc.contains("appDid"))
        d.appDId = doc.at("appDid").get<std::string>();
    else
        throw MissingFieldError("appDId");

    requireField(doc, "appName");
    requireField(doc, "appProvider");
    requireField(doc, "virtualComputeDescriptor");

    d.appName = doc.at("appName").get<std::string>();
    d.appProvider = doc.at("appProvider").get<std::string>();

    const auto& vcd = doc.at("virtualComputeDescriptor");
    requireField(vcd, "ram");
    requireField(vcd, "disk");
    requireField(vcd, "cpu");
    d.virtualComputeDescriptor.ram = quantityField(vcd, "ram");
    d.virtualComputeDescriptor.disk = quantityField(vcd, "disk");
    d.virtualComputeDescriptor.cpu = quantityField(vcd, "cpu");

    if (doc.contains("appServiceRequired"))
        for (const auto& s : doc.at("appServiceRequired"))
            d.appServiceRequired.push_back(s.get<std::string>());

    if (doc.contains("emulatedMecApplication")) {
        const auto& emu = doc.at("emulatedMecApplication");
        requireField(emu, "ipAddress");
        requireField(emu, "port");
        EmulatedEndpoint ep;
        ep.ipAddress = emu.at("ipAddress").get<std::string>();
        int64_t port = emu.at("port").get<int64_t>();
        if (port < 1 || port > 65535)
            throw BadValueError("emulatedMecApplication.port out of range");
        ep.port = static_cast<uint16_t>(port);
        d.emulatedMecApplication = ep;
    }

    return d;
}

AppDescriptor parseAppDescriptor(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw BadValueError(std::string("descriptor is not valid JSON: ") + e.what());
    }
    return appDescriptorFromJson(doc);
}

nlohmann::ordered_json appDescriptorToJson(const AppDescriptor& d) {
    nlohmann::ordered_json out;
    out["appDId"] = d.appDId;
    out["appName"] = d.appName;
    out["appProvider"] = d.appProvider;
    out["virtualComputeDescriptor"] = {
        {"ram", d.virtualComputeDescriptor.ram},
        {"disk", d.virtualComputeDescriptor.disk},
        {"cpu", d.virtualComputeDescriptor.cpu},
    };
    out["appServiceRequired"] = d.appServiceRequired;
    if (d.emulatedMecApplication) {
        out["emulatedMecApplication"] = {
            {"ipAddress", d.emulatedMecApplication->ipAddress},
            {"port", d.emulatedMecApplication->port},
        };
    }
    return out;
}

std::string serializeAppDescriptor(const AppDescriptor& d) {
    return appDescriptorToJson(d).dump(2);
}

} // namespace mecsim
