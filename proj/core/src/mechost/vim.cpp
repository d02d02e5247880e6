#include "mecsim/mechost/vim.hpp"

#include "mecsim/kernel/sim.hpp"

namespace mecsim {

MecAppEntry& Vim::registerApp(const std::string& appInstanceId, NodeId handle,
                              Endpoint endpoint, const ResourceVector& demand) {
    if (mecApps_.count(appInstanceId))
        throw DuplicateNameError("app instance already registered: " + appInstanceId);
    if (!resourceFits(demand, free_))
        throw InsufficientResourcesError(
            "demand " + demand.str() + " does not fit free " + free_.str());
    free_ = free_ - demand;
    auto [it, inserted] = mecApps_.emplace(
        appInstanceId,
        MecAppEntry{appInstanceId, std::move(handle), std::move(endpoint), demand});
    return it->second;
}

void Vim::deregisterApp(const std::string& appInstanceId, Simulator* sim) {
    auto it = mecApps_.find(appInstanceId);
    if (it == mecApps_.end())
        throw UnknownAppError("no such app instance: " + appInstanceId);
    if (sim) {
        auto jt = jobs_.find(appInstanceId);
        if (jt != jobs_.end())
            for (auto& job : jt->second)
                sim->cancel(job);
    }
    jobs_.erase(appInstanceId);
    free_ = free_ + it->second.allocated;
    mecApps_.erase(it);
}

double Vim::computeProcessingTime(const std::string& appInstanceId,
                                  int64_t nInstructions) const {
    auto it = mecApps_.find(appInstanceId);
    if (it == mecApps_.end())
        throw UnknownAppError("no such app instance: " + appInstanceId);
    if (nInstructions <= 0)
        throw BadValueError("nInstructions must be > 0");

    const double rApp = static_cast<double>(it->second.allocated.cpu);
    if (rApp == 0)
        throw ZeroRateError("app " + appInstanceId + " has zero cpu rate");

    if (paradigm_ == SharingParadigm::Segregation)
        return static_cast<double>(nInstructions) / rApp;

    // fair sharing: effective rate = C * r_app / sum_j r_j
    double sumRates = 0;
    for (const auto& [id, entry] : mecApps_)
        sumRates += static_cast<double>(entry.allocated.cpu);
    if (sumRates <= 0)
        throw ZeroRateError("no requested cpu rates on host");
    const double capacity = static_cast<double>(budget_.cpu);
    return static_cast<double>(nInstructions) * sumRates / (capacity * rApp);
}

void Vim::trackJob(const std::string& appInstanceId, EventHandle job) {
    jobs_[appInstanceId].push_back(std::move(job));
}

} // namespace mecsim
