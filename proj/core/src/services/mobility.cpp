#include "mecsim/services/mobility.hpp"

#include <algorithm>
#include <cmath>

#include "mecsim/errors.hpp"

namespace mecsim {

int cqiModel(double distanceMeters, double dMaxMeters) {
    if (distanceMeters < 0 || dMaxMeters <= 0)
        throw BadValueError("cqiModel: distance >= 0 and dMax > 0 required");
    int cqi = static_cast<int>(std::lround(15.0 * (1.0 - distanceMeters / dMaxMeters)));
    return std::clamp(cqi, 0, 15);
}

void MobilityModel::addUe(const std::string& ueId, Vec2 position, Vec2 velocity) {
    if (ues_.count(ueId))
        throw DuplicateNameError("duplicate ue: " + ueId);
    UeState state{ueId, position, velocity, "", 0};
    refreshRadio(state);
    ues_[ueId] = state;
}

void MobilityModel::setVelocity(const std::string& ueId, Vec2 velocity) {
    auto it = ues_.find(ueId);
    if (it == ues_.end())
        throw UnknownUeError("no such ue: " + ueId);
    it->second.velocity = velocity;
}

void MobilityModel::step(double dt) {
    if (dt <= 0)
        throw BadValueError("mobility step dt must be > 0");
    for (auto& [id, ue] : ues_) {
        ue.position = ue.position + ue.velocity * dt;
        refreshRadio(ue);
    }
}

void MobilityModel::refreshRadio(UeState& ue) {
    if (gnbs_.empty()) {
        ue.servingCell.clear();
        ue.cqi = 0;
        return;
    }
    const GnbConfig* best = nullptr;
    double bestDist = 0;
    for (const auto& gnb : gnbs_) {
        double d = distance(ue.position, gnb.position);
        if (!best || d < bestDist || (d == bestDist && gnb.id < best->id)) {
            best = &gnb;
            bestDist = d;
        }
    }
    ue.servingCell = best->id;
    ue.cqi = cqiModel(bestDist, cellRange_);
}

const UeState& MobilityModel::ue(const std::string& ueId) const {
    auto it = ues_.find(ueId);
    if (it == ues_.end())
        throw UnknownUeError("no such ue: " + ueId);
    return it->second;
}

} // namespace mecsim
