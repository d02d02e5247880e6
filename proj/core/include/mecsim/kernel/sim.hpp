#ifndef MECSIM_KERNEL_SIM_HPP
#define MECSIM_KERNEL_SIM_HPP

#include <condition_variable>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "mecsim/kernel/event_queue.hpp"
#include "mecsim/kernel/node.hpp"
#include "mecsim/kernel/transport.hpp"

namespace mecsim {

enum class ClockMode { Virtual, Realtime };

// Discrete-event engine: virtual clock, event queue, transport graph, node
// registry. In Realtime mode dispatch is paced against the wall clock and
// bridge threads may inject messages through a thread-safe queue.
class Simulator {
public:
    using LogFn = std::function<void(SimTime t, const std::string& node,
                                     const std::string& kind,
                                     const nlohmann::json& attrs)>;

    explicit Simulator(ClockMode mode = ClockMode::Virtual) : mode_(mode) {}

    SimTime now() const { return now_; }
    ClockMode mode() const { return mode_; }

    // Wall-clock lag beyond which realtime dispatch logs a warning.
    void setMaxLagWarning(double seconds) { maxLag_ = seconds; }
    void setLogger(LogFn fn) { log_ = std::move(fn); }
    void log(const std::string& node, const std::string& kind,
             const nlohmann::json& attrs) const {
        if (log_)
            log_(now_, node, kind, attrs);
    }

    void addNode(Node* node);
    bool hasNode(const NodeId& id) const { return nodes_.count(id) > 0; }
    TransportGraph& transport() { return transport_; }

    // Timer scheduled at absolute virtual time; action runs on the loop thread.
    EventHandle scheduleAt(SimTime fireAt, std::function<void()> action);
    EventHandle scheduleAfter(SimTime delay, std::function<void()> action) {
        return scheduleAt(now_ + delay, std::move(action));
    }
    bool cancel(const EventHandle& h) { return queue_.cancel(h); }

    // Node-to-node message over the transport graph.
    void sendMessage(const NodeId& src, const NodeId& dst, Message payload);

    // Datagram-style send: resolves msg.dst.address through the address map
    // (falling back to the default route) and delivers to the owning node.
    void sendDatagram(const NodeId& srcNode, Message msg);

    // Local delivery without transport delay (same-node app dispatch).
    void deliverNow(const NodeId& dst, Message msg);

    // Thread-safe: queue a message for delivery at the loop's current time.
    // Realtime mode only; used by bridge I/O threads.
    void injectMessage(const NodeId& target, Message msg);

    // Dispatch all events with fireAt <= until; clock ends at `until`.
    // Returns the number of dispatched events.
    std::size_t run(SimTime until);
    // Dispatch until exhaustion; clock ends at the last event time.
    std::size_t runAll();

    std::size_t pendingEvents() const { return queue_.pending(); }

private:
    void dispatch(const EventHandle& ev);
    void drainInjected();
    std::size_t runLoop(SimTime until, bool bounded);

    ClockMode mode_;
    SimTime now_ = 0;
    double maxLag_ = 0.050;
    EventQueue queue_;
    TransportGraph transport_;
    std::map<NodeId, Node*> nodes_;
    LogFn log_;

    std::mutex injectMutex_;
    std::condition_variable injectCv_;
    std::vector<std::pair<NodeId, Message>> injected_;
    bool stopRequested_ = false;
};

} // namespace mecsim

#endif
