#include "mecsim/services/rnis_service.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

nlohmann::ordered_json RnisService::getL2Meas(
    Simulator& sim, const std::optional<std::string>& ueId,
    const std::optional<std::string>& cellId) const {
    if (ueId && !mobility_->hasUe(*ueId))
        throw UnknownUeError("no such ue: " + *ueId);

    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [id, ue] : mobility_->ues()) {
        if (ueId && id != *ueId)
            continue;
        if (cellId && ue.servingCell != *cellId)
            continue;
        out.push_back({{"ueId", id},
                       {"cellId", ue.servingCell},
                       {"cqi", ue.cqi},
                       {"timestamp", sim.now()}});
    }
    return out;
}

HttpResponse RnisService::handleRequest(Simulator& sim, const HttpRequest& req) {
    if (req.method != "GET" || req.path != "/rni/v2/queries/layer2_meas")
        return HttpResponse::error(404, "unknown route " + req.path);
    try {
        auto meas = getL2Meas(sim, req.queryParam("ue_ipv4_address"),
                              req.queryParam("cell_id"));
        return HttpResponse::json(200, {{"l2Meas", meas}});
    } catch (const UnknownUeError& e) {
        return HttpResponse::error(404, e.what());
    }
}

} // namespace mecsim
