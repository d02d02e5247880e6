#ifndef MECSIM_SERVICES_RNIS_SERVICE_HPP
#define MECSIM_SERVICES_RNIS_SERVICE_HPP

#include <memory>
#include <optional>

#include "mecsim/mechost/service_base.hpp"
#include "mecsim/services/mobility.hpp"

namespace mecsim {

// Radio Network Information service: per-UE layer-2 measurements fed by the
// synthetic mobility/radio model.
//   GET /rni/v2/queries/layer2_meas[?ue_ipv4_address=|cell_id=]
class RnisService : public MecServiceBase {
public:
    RnisService(Endpoint endpoint, std::shared_ptr<MobilityModel> mobility)
        : MecServiceBase("RNIService", std::move(endpoint)),
          mobility_(std::move(mobility)) {}

    // Snapshot of matching UE measurements. Throws UnknownUe for an explicit
    // unknown ueId filter.
    nlohmann::ordered_json getL2Meas(Simulator& sim,
                                     const std::optional<std::string>& ueId,
                                     const std::optional<std::string>& cellId) const;

protected:
    HttpResponse handleRequest(Simulator& sim, const HttpRequest& req) override;

private:
    std::shared_ptr<MobilityModel> mobility_;
};

} // namespace mecsim

#endif
