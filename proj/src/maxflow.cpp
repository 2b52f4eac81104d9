#include "lpcut/maxflow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lpcut {

FlowNetwork::NodeId FlowNetwork::add_node() {
    return node_count_++;
}

void FlowNetwork::check_endpoint(NodeId v) const {
    if (v == source_id || v == sink_id)
        return;
    if (v < 0 || v >= node_count_)
        throw InputError("unknown node id " + std::to_string(v));
}

void FlowNetwork::add_edge(NodeId u, NodeId v, double cap_uv, double cap_vu) {
    check_endpoint(u);
    check_endpoint(v);
    if (u == v)
        throw InputError("self-loop arcs are not allowed");
    if (!std::isfinite(cap_uv) || !std::isfinite(cap_vu) || cap_uv < 0.0 || cap_vu < 0.0)
        throw InputError("capacities must be finite and non-negative");

    auto key = u < v ? std::pair{u, v} : std::pair{v, u};
    auto [it, inserted] = arc_lookup_.try_emplace(key, arcs_.size());
    if (inserted)
        arcs_.push_back(Arc{u, v, 0.0, 0.0, 0.0, 0.0}); // keep caller orientation
    Arc& arc = arcs_[it->second];
    if (u == arc.tail) {
        arc.cap += cap_uv;
        arc.reverse_cap += cap_vu;
    } else {
        arc.cap += cap_vu;
        arc.reverse_cap += cap_uv;
    }
}

namespace {

// Internal residual arc; paired arcs live at indices k and k^1.
struct ResArc {
    int head;
    double res;
};

} // namespace

CutResult FlowNetwork::max_flow() {
    const int n = node_count_;
    const int src = n;
    const int snk = n + 1;
    const int total = n + 2;

    auto internal = [&](NodeId v) {
        if (v == source_id) return src;
        if (v == sink_id) return snk;
        return v;
    };

    std::vector<ResArc> res;
    res.reserve(2 * arcs_.size());
    std::vector<std::vector<int>> adj(total);
    for (const Arc& a : arcs_) {
        int u = internal(a.tail);
        int v = internal(a.head);
        adj[u].push_back(static_cast<int>(res.size()));
        res.push_back({v, a.cap});
        adj[v].push_back(static_cast<int>(res.size()));
        res.push_back({u, a.reverse_cap});
    }

    std::vector<int> level(total);
    std::vector<std::size_t> iter(total);
    std::vector<int> queue(total);

    auto bfs = [&]() {
        std::fill(level.begin(), level.end(), -1);
        int head = 0, tail = 0;
        level[src] = 0;
        queue[tail++] = src;
        while (head < tail) {
            int u = queue[head++];
            for (int idx : adj[u]) {
                if (res[idx].res > 0.0 && level[res[idx].head] < 0) {
                    level[res[idx].head] = level[u] + 1;
                    queue[tail++] = res[idx].head;
                }
            }
        }
        return level[snk] >= 0;
    };

    auto dfs = [&](auto&& self, int u, double limit) -> double {
        if (u == snk)
            return limit;
        for (; iter[u] < adj[u].size(); ++iter[u]) {
            int idx = adj[u][iter[u]];
            ResArc& arc = res[idx];
            if (arc.res > 0.0 && level[arc.head] == level[u] + 1) {
                double pushed = self(self, arc.head, std::min(limit, arc.res));
                if (pushed > 0.0) {
                    arc.res -= pushed;
                    res[idx ^ 1].res += pushed;
                    return pushed;
                }
            }
        }
        return 0.0;
    };

    double flow = 0.0;
    while (bfs()) {
        std::fill(iter.begin(), iter.end(), 0);
        while (true) {
            double pushed = dfs(dfs, src, std::numeric_limits<double>::infinity());
            if (pushed <= 0.0)
                break;
            flow += pushed;
        }
    }

    // Residual reachability from the source fixes the cut side.
    std::vector<char> reach(total, 0);
    int head = 0, tail = 0;
    reach[src] = 1;
    queue[tail++] = src;
    while (head < tail) {
        int u = queue[head++];
        for (int idx : adj[u]) {
            if (res[idx].res > 0.0 && !reach[res[idx].head]) {
                reach[res[idx].head] = 1;
                queue[tail++] = res[idx].head;
            }
        }
    }

    for (std::size_t k = 0; k < arcs_.size(); ++k) {
        arcs_[k].residual = res[2 * k].res;
        arcs_[k].reverse_residual = res[2 * k + 1].res;
    }

    CutResult result;
    result.flow_value = flow;
    result.side.resize(n);
    for (int v = 0; v < n; ++v)
        result.side[v] = reach[v] ? CutSide::source : CutSide::sink;
    return result;
}

double cut_capacity(const FlowNetwork& net, std::span<const CutSide> side) {
    if (static_cast<int>(side.size()) != net.node_count())
        throw InputError("side assignment does not cover every node");
    auto side_of = [&](FlowNetwork::NodeId v) {
        if (v == FlowNetwork::source_id) return CutSide::source;
        if (v == FlowNetwork::sink_id) return CutSide::sink;
        return side[static_cast<std::size_t>(v)];
    };
    double total = 0.0;
    for (const auto& arc : net.arcs()) {
        CutSide st = side_of(arc.tail);
        CutSide sh = side_of(arc.head);
        if (st == CutSide::source && sh == CutSide::sink)
            total += arc.cap;
        else if (st == CutSide::sink && sh == CutSide::source)
            total += arc.reverse_cap;
    }
    return total;
}

} // namespace lpcut
