#ifndef LPCUT_REDUCTION_HPP
#define LPCUT_REDUCTION_HPP

#include <vector>

#include "lpcut/energy.hpp"
#include "lpcut/maxflow.hpp"
#include "lpcut/submodular.hpp"

namespace lpcut {

/// Network plus the constant such that, for every labeling, the capacity of
/// the corresponding s-t cut plus offset equals the energy of that labeling.
struct BuiltNetwork {
    FlowNetwork network;
    double offset = 0.0;
};

/// An edge that stopped certification or construction.
struct EdgeCertificateIssue {
    int edge_index;
    int i;
    int j;
    CertStatus status;
};

/// solve() refused because the policy's submodularity requirement failed.
class CertificationError : public Error {
public:
    CertificationError(std::string message, std::vector<EdgeCertificateIssue> issues)
        : Error(std::move(message)), issues_(std::move(issues)) {}

    const std::vector<EdgeCertificateIssue>& issues() const { return issues_; }

private:
    std::vector<EdgeCertificateIssue> issues_;
};

/// build_network() hit a pairwise table it cannot represent with
/// non-negative capacities.
class ReductionError : public Error {
public:
    ReductionError(std::string message, int edge_index)
        : Error(std::move(message)), edge_index_(edge_index) {}

    int edge_index() const { return edge_index_; }

private:
    int edge_index_;
};

/// Turns an energy whose pairwise tables are all submodular into a flow
/// network whose minimum cut is the minimizing labeling.
///
/// One network node per vertex; a node on the source side means label 0, on
/// the sink side label 1. Each pairwise table (A,B,C,D) = costs of
/// (00,01,10,11) is decomposed as
///   A + (C-A)[x_i=1] + (D-C)[x_j=1] + (B+C-A-D)[x_i=0, x_j=1],
/// charging A to the offset, the two middle deltas to the endpoints' label-1
/// costs, and the last coefficient — non-negative exactly when the table is
/// submodular — to an n-link arc i->j. Per-vertex costs (u0,u1) are shifted
/// by m = min(u0,u1) into the offset, leaving t-link capacities u1-m on
/// source->i and u0-m on i->sink. A coefficient below -1e-12 times the table
/// maximum raises ReductionError; within the tolerance it clamps to 0.
BuiltNetwork build_network(const EnergyFunction& e);

enum class SolvePolicy {
    /// Every pairwise term must be certified submodular for all p.
    require_certified,
    /// Every pairwise term must be submodular at the requested p.
    allow_per_p_check,
};

struct Solution {
    Labeling labeling;
    double powered_energy = 0.0; // sum of p-th powers on the original terms
    double lp_value = 0.0;       // powered_energy^(1/p)
    double max_term = 0.0;       // largest active original term
    double flow_value = 0.0;     // max flow of the solved network
    double offset = 0.0;         // cut offset of the solved network
    double p = 1.0;
};

/// Exact global minimizer of the powered energy:
/// certify -> normalize -> power -> build network -> max flow -> labeling.
/// powered_energy / lp_value / max_term are reported on the original,
/// unnormalized terms; flow_value + offset equals the minimizer's energy on
/// the normalized powered instance.
Solution solve(const EnergyFunction& e, double p,
               SolvePolicy policy = SolvePolicy::require_certified);

} // namespace lpcut

#endif
