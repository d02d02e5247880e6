#ifndef MECSIM_KERNEL_EVENT_QUEUE_HPP
#define MECSIM_KERNEL_EVENT_QUEUE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <queue>
#include <tuple>
#include <vector>

#include "mecsim/errors.hpp"
#include "mecsim/kernel/message.hpp"

namespace mecsim {

using SimTime = double;

// Timestamped kernel event. Dispatch order is (fireAt, seq): nondecreasing
// time, insertion order within equal times, so replays are deterministic.
struct SimEvent {
    SimTime fireAt = 0;
    uint64_t seq = 0;
    NodeId target;
    Message payload;
    std::function<void()> action; // timers; takes precedence over node delivery
    bool cancelled = false;
    bool dispatched = false;
};

using EventHandle = std::shared_ptr<SimEvent>;

// Binary-heap event queue. Cancellation is lazy: cancelled events stay in the
// heap and are skipped at pop time.
class EventQueue {
public:
    EventHandle schedule(SimTime now, SimTime fireAt, NodeId target,
                         Message payload, std::function<void()> action = {}) {
        if (fireAt < now)
            throw PastTimeError("schedule: fireAt " + std::to_string(fireAt) +
                                " < now " + std::to_string(now));
        auto ev = std::make_shared<SimEvent>();
        ev->fireAt = fireAt;
        ev->seq = nextSeq_++;
        ev->target = std::move(target);
        ev->payload = std::move(payload);
        ev->action = std::move(action);
        heap_.push(ev);
        ++pending_;
        return ev;
    }

    // true iff the event was pending and is now removed. Idempotent; false on
    // already-cancelled or already-fired events.
    bool cancel(const EventHandle& h) {
        if (!h || h->cancelled || h->dispatched)
            return false;
        h->cancelled = true;
        --pending_;
        return true;
    }

    bool empty() const { return pending_ == 0; }
    std::size_t pending() const { return pending_; }

    // fireAt of the earliest live event; empty() must be false.
    SimTime nextTime() const {
        skimCancelled();
        return heap_.top()->fireAt;
    }

    EventHandle pop() {
        skimCancelled();
        auto ev = heap_.top();
        heap_.pop();
        ev->dispatched = true;
        --pending_;
        return ev;
    }

private:
    struct Later {
        bool operator()(const EventHandle& a, const EventHandle& b) const {
            return std::tie(a->fireAt, a->seq) > std::tie(b->fireAt, b->seq);
        }
    };

    void skimCancelled() const {
        while (!heap_.empty() && heap_.top()->cancelled)
            heap_.pop();
    }

    mutable std::priority_queue<EventHandle, std::vector<EventHandle>, Later> heap_;
    uint64_t nextSeq_ = 0;
    std::size_t pending_ = 0;
};

} // namespace mecsim

#endif
