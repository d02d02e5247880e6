#ifndef MECSIM_SERVICES_MOBILITY_HPP
#define MECSIM_SERVICES_MOBILITY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mecsim/descriptors/scenario.hpp"
#include "mecsim/geometry.hpp"

namespace mecsim {

struct UeState {
    std::string ueId;
    Vec2 position;
    Vec2 velocity;
    std::string servingCell; // nearest gNB, ties to the lowest gnbId
    int cqi = 0;             // 0..15
};

// Linear distance-based CQI: clamp(round(15 * (1 - distance/dMax)), 0, 15).
int cqiModel(double distanceMeters, double dMaxMeters);

// Synthetic mobility and radio feed shared by the Location service and the
// RNIS. Positions advance linearly; cell attachment and CQI are recomputed on
// every step.
class MobilityModel {
public:
    MobilityModel(std::vector<GnbConfig> gnbs, double cellRange)
        : gnbs_(std::move(gnbs)), cellRange_(cellRange) {}

    void addUe(const std::string& ueId, Vec2 position, Vec2 velocity);
    void setVelocity(const std::string& ueId, Vec2 velocity);

    // position += velocity * dt, then cells and CQI are refreshed.
    void step(double dt);

    bool hasUe(const std::string& ueId) const { return ues_.count(ueId) > 0; }
    const UeState& ue(const std::string& ueId) const;
    const std::map<std::string, UeState>& ues() const { return ues_; }
    const std::vector<GnbConfig>& gnbs() const { return gnbs_; }

private:
    void refreshRadio(UeState& ue);

    std::vector<GnbConfig> gnbs_;
    double cellRange_;
    std::map<std::string, UeState> ues_;
};

} // namespace mecsim

#endif
