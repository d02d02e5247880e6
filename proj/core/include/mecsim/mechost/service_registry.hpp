#ifndef MECSIM_MECHOST_SERVICE_REGISTRY_HPP
#define MECSIM_MECHOST_SERVICE_REGISTRY_HPP

#include <map>
#include <string>

#include "mecsim/mechost/service_base.hpp"

namespace mecsim {

// Fixed port plan for platform endpoints, for reproducible logs.
inline constexpr uint16_t kRegistryPort = 10021;
inline constexpr uint16_t kLocationServicePort = 10020;
inline constexpr uint16_t kRnisPort = 10030;

struct ServiceDescriptor {
    std::string serName;
    std::string serInstanceId;
    Endpoint endpoint;
    std::string state = "ACTIVE";

    nlohmann::ordered_json toJson() const {
        return {{"serName", serName},
                {"serInstanceId", serInstanceId},
                {"transportInfo",
                 {{"endpoint", {{"host", endpoint.address}, {"port", endpoint.port}}}}},
                {"state", state}};
    }
};

// Mp1 service discovery: GET /mec_service_mgmt/v1/services with an optional
// ser_name filter.
class ServiceRegistry : public MecServiceBase {
public:
    explicit ServiceRegistry(Endpoint endpoint)
        : MecServiceBase("ServiceRegistry", std::move(endpoint)) {}

    void addService(const ServiceDescriptor& sd) { services_[sd.serName] = sd; }
    const std::map<std::string, ServiceDescriptor>& services() const {
        return services_;
    }

protected:
    HttpResponse handleRequest(Simulator& sim, const HttpRequest& req) override;

private:
    std::map<std::string, ServiceDescriptor> services_; // keyed by serName
};

} // namespace mecsim

#endif
