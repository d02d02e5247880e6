#include "mecsim/mechost/service_registry.hpp"

namespace mecsim {

HttpResponse ServiceRegistry::handleRequest(Simulator&, const HttpRequest& req) {
    if (req.method != "GET" || req.path != "/mec_service_mgmt/v1/services")
        return HttpResponse::error(404, "unknown route " + req.path);

    auto filter = req.queryParam("ser_name");
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [name, sd] : services_) {
        if (filter && name != *filter)
            continue;
        out.push_back(sd.toJson());
    }
    return HttpResponse::json(200, out);
}

} // namespace mecsim
