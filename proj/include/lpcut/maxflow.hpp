#ifndef LPCUT_MAXFLOW_HPP
#define LPCUT_MAXFLOW_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lpcut/errors.hpp"

namespace lpcut {

enum class CutSide : std::uint8_t { source, sink };

struct CutResult {
    double flow_value = 0.0;
    std::vector<CutSide> side; // one entry per non-terminal node
};

/// s-t capacitated network with double capacities.
///
/// Nodes are dense ids from add_node(); the two terminals are the reserved
/// ids source_id and sink_id. Each undirected slot stores the pair of
/// directed capacities together; adding an edge over an existing pair
/// accumulates into it. max_flow() resets residuals from the stored
/// capacities, so it can be re-run after further add_edge calls.
///
/// Augmentation uses Dinic's scheme (BFS level graph + blocking flow), which
/// augments along shortest paths. An arc counts as usable while its residual
/// is strictly positive; every augmentation zeroes its bottleneck arc exactly,
/// so the run is bounded by the usual blocking-flow count even with capacities
/// spanning many orders of magnitude (powered energies do). The cut side of a
/// node is its residual reachability from the source, so ties between minimum
/// cuts resolve to the source-side-minimal cut and results are deterministic
/// for a fixed insertion order.
class FlowNetwork {
public:
    using NodeId = int;
    static constexpr NodeId source_id = -1;
    static constexpr NodeId sink_id = -2;

    struct Arc {
        NodeId tail;
        NodeId head;
        double cap = 0.0;              // tail -> head
        double reverse_cap = 0.0;      // head -> tail
        double residual = 0.0;         // valid after max_flow()
        double reverse_residual = 0.0; // valid after max_flow()
    };

    NodeId add_node();

    /// Capacities must be finite and >= 0; u != v; endpoints must exist.
    void add_edge(NodeId u, NodeId v, double cap_uv, double cap_vu);

    int node_count() const { return node_count_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    CutResult max_flow();

private:
    void check_endpoint(NodeId v) const;

    int node_count_ = 0;
    std::vector<Arc> arcs_;
    std::map<std::pair<NodeId, NodeId>, std::size_t> arc_lookup_;
};

/// Total capacity crossing from {source} ∪ source-side nodes to the rest.
/// side must assign every non-terminal node.
double cut_capacity(const FlowNetwork& net, std::span<const CutSide> side);

} // namespace lpcut

#endif
