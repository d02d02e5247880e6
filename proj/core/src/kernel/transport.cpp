#include "mecsim/kernel/transport.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace mecsim {

void TransportGraph::addLink(const TransportLink& link) {
    adj_[link.a].push_back({link.b, link.latency, link.bitrate});
    adj_[link.b].push_back({link.a, link.latency, link.bitrate});
}

std::vector<NodeId> TransportGraph::route(const NodeId& src, const NodeId& dst) const {
    if (!adj_.count(src) || !adj_.count(dst))
        throw UnroutableError("no path " + src + " -> " + dst);
    if (src == dst)
        return {src};

    // Dijkstra on latency; ties broken by node id for reproducible paths.
    std::map<NodeId, SimTime> dist;
    std::map<NodeId, NodeId> prev;
    using Item = std::pair<SimTime, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0;
    pq.push({0, src});
    std::set<NodeId> done;

    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done.count(u))
            continue;
        done.insert(u);
        if (u == dst)
            break;
        auto it = adj_.find(u);
        if (it == adj_.end())
            continue;
        for (const auto& e : it->second) {
            SimTime nd = d + e.latency;
            auto dit = dist.find(e.to);
            if (dit == dist.end() || nd < dit->second ||
                (nd == dit->second && u < prev[e.to])) {
                dist[e.to] = nd;
                prev[e.to] = u;
                pq.push({nd, e.to});
            }
        }
    }

    if (!done.count(dst))
        throw UnroutableError("no path " + src + " -> " + dst);

    std::vector<NodeId> path{dst};
    while (path.back() != src)
        path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

SimTime TransportGraph::deliveryTime(const NodeId& src, const NodeId& dst,
                                     SimTime sendTime, std::size_t bits) {
    auto path = route(src, dst);
    SimTime t = sendTime;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const auto& u = path[i];
        const auto& v = path[i + 1];
        const Edge* edge = nullptr;
        for (const auto& e : adj_.at(u))
            if (e.to == v) {
                edge = &e;
                break;
            }
        SimTime arrive = t + edge->latency;
        if (edge->bitrate)
            arrive += static_cast<double>(bits) / *edge->bitrate;
        auto key = std::make_pair(u, v);
        auto it = lastArrival_.find(key);
        if (it != lastArrival_.end())
            arrive = std::max(arrive, it->second);
        lastArrival_[key] = arrive;
        t = arrive;
    }
    return t;
}

void TransportGraph::bindAddress(const std::string& address, const NodeId& node) {
    addresses_[address] = node;
}

void TransportGraph::unbindAddress(const std::string& address) {
    addresses_.erase(address);
}

std::optional<NodeId> TransportGraph::resolveAddress(const std::string& address) const {
    auto it = addresses_.find(address);
    if (it != addresses_.end())
        return it->second;
    return defaultRoute_;
}

} // namespace mecsim
