#ifndef MECSIM_DESCRIPTORS_APP_DESCRIPTOR_HPP
#define MECSIM_DESCRIPTORS_APP_DESCRIPTOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mecsim/descriptors/resource_vector.hpp"

namespace mecsim {

// Endpoint of a MEC app running outside the simulator.
struct EmulatedEndpoint {
    std::string ipAddress;
    uint16_t port = 0;
    bool operator==(const EmulatedEndpoint&) const = default;
};

// Onboarded application package metadata. Descriptors carrying an
// emulatedMecApplication entry describe external apps: they never get
// resources allocated on any host.
struct AppDescriptor {
    std::string appDId;
    std::string appName;
    std::string appProvider;
    ResourceVector virtualComputeDescriptor;
    std::vector<std::string> appServiceRequired;
    std::optional<EmulatedEndpoint> emulatedMecApplication;

    bool operator==(const AppDescriptor&) const = default;

    bool isExternal() const { return emulatedMecApplication.has_value(); }
};

// Parses and validates a descriptor JSON document. Unknown fields are
// ignored. Accepts both `appDid` and `appDId` spellings on input.
// Throws MissingField / BadValue.
AppDescriptor parseAppDescriptor(const std::string& text);
AppDescriptor appDescriptorFromJson(const nlohmann::json& doc);

// Canonical serialization; emits `appDId`. parse(serialize(d)) == d.
nlohmann::ordered_json appDescriptorToJson(const AppDescriptor& d);
std::string serializeAppDescriptor(const AppDescriptor& d);

} // namespace mecsim

#endif
