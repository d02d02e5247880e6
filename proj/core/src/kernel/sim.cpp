#include "mecsim/kernel/sim.hpp"

#include <chrono>
#include <iostream>
#include <thread>

namespace mecsim {

namespace {
using WallClock = std::chrono::steady_clock;
}

void Simulator::addNode(Node* node) {
    if (nodes_.count(node->id()))
        throw DuplicateNameError("node already registered: " + node->id());
    nodes_[node->id()] = node;
}

EventHandle Simulator::scheduleAt(SimTime fireAt, std::function<void()> action) {
    return queue_.schedule(now_, fireAt, {}, {}, std::move(action));
}

void Simulator::sendMessage(const NodeId& src, const NodeId& dst, Message payload) {
    if (!nodes_.count(dst) || !transport_.hasNode(dst))
        throw UnroutableError("unknown destination node: " + dst);
    SimTime arrive = transport_.deliveryTime(src, dst, now_, payload.bits());
    queue_.schedule(now_, arrive, dst, std::move(payload));
}

void Simulator::sendDatagram(const NodeId& srcNode, Message msg) {
    auto owner = transport_.resolveAddress(msg.dst.address);
    if (!owner)
        throw UnroutableError("no route to address " + msg.dst.address);
    if (*owner == srcNode) {
        deliverNow(*owner, std::move(msg));
        return;
    }
    sendMessage(srcNode, *owner, std::move(msg));
}

void Simulator::deliverNow(const NodeId& dst, Message msg) {
    queue_.schedule(now_, now_, dst, std::move(msg));
}

void Simulator::injectMessage(const NodeId& target, Message msg) {
    {
        std::lock_guard lock(injectMutex_);
        injected_.emplace_back(target, std::move(msg));
    }
    injectCv_.notify_one();
}

void Simulator::dispatch(const EventHandle& ev) {
    if (ev->action) {
        ev->action();
        return;
    }
    auto it = nodes_.find(ev->target);
    if (it != nodes_.end())
        it->second->onMessage(*this, ev->payload);
    // messages to nodes removed mid-flight are dropped
}

void Simulator::drainInjected() {
    std::vector<std::pair<NodeId, Message>> batch;
    {
        std::lock_guard lock(injectMutex_);
        batch.swap(injected_);
    }
    for (auto& [target, msg] : batch)
        queue_.schedule(now_, now_, target, std::move(msg));
}

std::size_t Simulator::runLoop(SimTime until, bool bounded) {
    std::size_t dispatched = 0;
    const auto wallStart = WallClock::now() -
        std::chrono::duration_cast<WallClock::duration>(
            std::chrono::duration<double>(now_));

    auto wallElapsed = [&] {
        return std::chrono::duration<double>(WallClock::now() - wallStart).count();
    };

    while (true) {
        if (mode_ == ClockMode::Realtime) {
            // Wait for either the next event's due time or an injection.
            std::unique_lock lock(injectMutex_);
            while (injected_.empty()) {
                if (queue_.empty()) {
                    if (bounded && wallElapsed() >= until)
                        break;
                    injectCv_.wait_for(lock, std::chrono::milliseconds(1));
                } else {
                    SimTime next = queue_.nextTime();
                    if (bounded && next > until) {
                        if (wallElapsed() >= until)
                            break;
                        injectCv_.wait_for(lock, std::chrono::milliseconds(1));
                        continue;
                    }
                    double lag = next - wallElapsed();
                    if (lag <= 0)
                        break;
                    injectCv_.wait_for(lock,
                        std::chrono::duration<double>(std::min(lag, 0.001)));
                }
            }
            lock.unlock();
            drainInjected();
            if (queue_.empty()) {
                if (!bounded || wallElapsed() >= until) {
                    if (bounded)
                        now_ = until;
                    return dispatched;
                }
                continue;
            }
            SimTime next = queue_.nextTime();
            if (bounded && next > until) {
                if (wallElapsed() >= until) {
                    now_ = until;
                    return dispatched;
                }
                continue;
            }
            if (next > wallElapsed())
                continue; // not due yet, keep waiting
            double lag = wallElapsed() - next;
            if (lag > maxLag_)
                std::cerr << "[mecsim] realtime lag " << lag << " s at t=" << next
                          << "\n";
        } else {
            if (queue_.empty() || (bounded && queue_.nextTime() > until))
                break;
        }

        auto ev = queue_.pop();
        now_ = std::max(now_, ev->fireAt);
        dispatch(ev);
        ++dispatched;
    }

    if (bounded)
        now_ = std::max(now_, until);
    return dispatched;
}

std::size_t Simulator::run(SimTime until) {
    return runLoop(until, true);
}

std::size_t Simulator::runAll() {
    return runLoop(0, false);
}

} // namespace mecsim
