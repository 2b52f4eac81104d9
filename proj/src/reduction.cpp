#include "lpcut/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace lpcut {

BuiltNetwork build_network(const EnergyFunction& e) {
    validate(e);
    const auto& topo = e.topology;

    BuiltNetwork built;
    FlowNetwork& net = built.network;
    for (int i = 0; i < topo.vertex_count; ++i)
        net.add_node();

    std::vector<double> pending_label1(topo.vertex_count, 0.0);

    for (std::size_t k = 0; k < topo.edges.size(); ++k) {
        auto [i, j] = topo.edges[k];
        const PairwiseTerm& t = e.pairwise[k];

        double nlink = t.cost01 + t.cost10 - t.cost00 - t.cost11;
        double tol = 1e-12 * t.max_value();
        if (nlink < -tol)
            throw ReductionError(
                "pairwise table of edge " + std::to_string(k) + " (" +
                    std::to_string(i) + "," + std::to_string(j) +
                    ") is not submodular; it cannot be represented by "
                    "non-negative cut capacities",
                static_cast<int>(k));
        nlink = std::max(nlink, 0.0);

        built.offset += t.cost00;
        pending_label1[i] += t.cost10 - t.cost00;
        pending_label1[j] += t.cost11 - t.cost10;
        net.add_edge(i, j, nlink, 0.0);
    }

    for (int i = 0; i < topo.vertex_count; ++i) {
        double u0 = e.unaries[i].cost0;
        double u1 = e.unaries[i].cost1 + pending_label1[i];
        double shift = std::min(u0, u1);
        built.offset += shift;
        net.add_edge(FlowNetwork::source_id, i, u1 - shift, 0.0);
        net.add_edge(i, FlowNetwork::sink_id, u0 - shift, 0.0);
    }

    return built;
}

namespace {

std::vector<EdgeCertificateIssue> certification_failures(const EnergyFunction& e,
                                                         double p,
                                                         SolvePolicy policy) {
    std::vector<EdgeCertificateIssue> issues;
    for (std::size_t k = 0; k < e.topology.edges.size(); ++k) {
        auto [i, j] = e.topology.edges[k];
        const PairwiseTerm& t = e.pairwise[k];
        Certificate cert = certify_all_p(t);
        bool ok = policy == SolvePolicy::require_certified
                      ? cert.status == CertStatus::certified_all_p
                      : is_submodular_at(t, p);
        if (!ok)
            issues.push_back({static_cast<int>(k), i, j, cert.status});
    }
    return issues;
}

std::string describe(const std::vector<EdgeCertificateIssue>& issues,
                     SolvePolicy policy, double p) {
    std::string msg = policy == SolvePolicy::require_certified
                          ? "not every pairwise term is certified submodular for all p"
                          : "not every pairwise term is submodular at p = " +
                                std::to_string(p);
    msg += ':';
    for (const auto& issue : issues)
        msg += " edge " + std::to_string(issue.edge_index) + " (" +
               std::to_string(issue.i) + "," + std::to_string(issue.j) + ") " +
               to_string(issue.status) + ';';
    return msg;
}

} // namespace

Solution solve(const EnergyFunction& e, double p, SolvePolicy policy) {
    require_valid_power(p);
    validate(e);

    auto issues = certification_failures(e, p, policy);
    if (!issues.empty()) {
        std::string message = describe(issues, policy, p); // before the move
        throw CertificationError(std::move(message), std::move(issues));
    }

    auto [normalized, scale] = normalize(e);
    EnergyFunction powered = power_transform(normalized, p);
    BuiltNetwork built = build_network(powered);
    CutResult cut = built.network.max_flow();

    Solution s;
    s.labeling.resize(e.topology.vertex_count);
    for (int i = 0; i < e.topology.vertex_count; ++i)
        s.labeling[i] = cut.side[i] == CutSide::source ? 0 : 1;

    s.powered_energy = evaluate_powered(e, s.labeling, p);
    if (!std::isfinite(s.powered_energy))
        throw NumericRangeError(
            "powered energy of the solution overflowed the double range; "
            "use a smaller p or rescale the input terms");
    s.lp_value = p == 1.0 ? s.powered_energy : std::pow(s.powered_energy, 1.0 / p);
    s.max_term = max_term(e, s.labeling);
    s.flow_value = cut.flow_value;
    s.offset = built.offset;
    s.p = p;
    return s;
}

} // namespace lpcut
