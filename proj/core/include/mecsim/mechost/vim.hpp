#ifndef MECSIM_MECHOST_VIM_HPP
#define MECSIM_MECHOST_VIM_HPP

#include <map>
#include <string>
#include <vector>

#include "mecsim/descriptors/app_descriptor.hpp"
#include "mecsim/descriptors/scenario.hpp"
#include "mecsim/kernel/event_queue.hpp"

namespace mecsim {

class Simulator;

// Per-running-app record. `allocated` is fixed at creation and equals the
// descriptor's virtualComputeDescriptor.
struct MecAppEntry {
    std::string appInstanceId;
    NodeId handle;       // node carrying the app instance
    Endpoint endpoint;   // data-plane endpoint returned to the UE
    ResourceVector allocated;
};

// Virtualisation Infrastructure Manager: resource bookkeeping and the
// processing-time model. Invariant after every operation:
// free + sum(allocated) == budget.
class Vim {
public:
    Vim(ResourceVector budget, SharingParadigm paradigm)
        : budget_(budget), free_(budget), paradigm_(paradigm) {}

    const ResourceVector& budget() const { return budget_; }
    const ResourceVector& free() const { return free_; }
    SharingParadigm paradigm() const { return paradigm_; }
    const std::map<std::string, MecAppEntry>& mecApps() const { return mecApps_; }

    MecAppEntry& registerApp(const std::string& appInstanceId, NodeId handle,
                             Endpoint endpoint, const ResourceVector& demand);

    // Removes the entry and releases resources. Pending compute jobs are
    // cancelled through the simulator when one is given.
    void deregisterApp(const std::string& appInstanceId, Simulator* sim);

    // Time to execute nInstructions under the host's paradigm. Fair-sharing
    // rates are snapshotted at call time and held for the whole job.
    double computeProcessingTime(const std::string& appInstanceId,
                                 int64_t nInstructions) const;

    // Associates a pending completion event with an app so termination can
    // cancel it.
    void trackJob(const std::string& appInstanceId, EventHandle job);

private:
    ResourceVector budget_;
    ResourceVector free_;
    SharingParadigm paradigm_;
    std::map<std::string, MecAppEntry> mecApps_;
    std::map<std::string, std::vector<EventHandle>> jobs_;
};

} // namespace mecsim

#endif
