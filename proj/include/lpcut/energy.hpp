#ifndef LPCUT_ENERGY_HPP
#define LPCUT_ENERGY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lpcut/errors.hpp"

namespace lpcut {

/// Undirected graph over vertices 0..vertex_count-1. Edges keep their input
/// order; no edge may appear twice in either orientation.
struct Topology {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const Topology&) const = default;
};

/// Per-vertex costs for the two labels.
struct UnaryTerm {
    double cost0 = 0.0;
    double cost1 = 0.0;

    bool operator==(const UnaryTerm&) const = default;
};

/// 4-entry cost table of an edge; cost_xy is the cost of assigning label x to
/// the first endpoint and y to the second. All entries non-negative.
struct PairwiseTerm {
    double cost00 = 0.0;
    double cost01 = 0.0;
    double cost10 = 0.0;
    double cost11 = 0.0;

    double max_value() const;

    bool operator==(const PairwiseTerm&) const = default;
};

/// A binary labeling problem: unary costs per vertex plus a pairwise cost
/// table per edge, aligned with topology.edges.
struct EnergyFunction {
    Topology topology;
    std::vector<UnaryTerm> unaries;
    std::vector<PairwiseTerm> pairwise;

    bool operator==(const EnergyFunction&) const = default;
};

/// One label in {0,1} per vertex, in vertex order.
using Labeling = std::vector<std::uint8_t>;

/// Throws InputError if the term lists do not match the topology, an edge
/// endpoint is out of range, an edge repeats (in either orientation), or any
/// cost is negative or non-finite.
void validate(const EnergyFunction& e);

/// Sum of all active unary and pairwise costs, each raised to the power p.
/// At p = 1 this is the plain energy, summed without any powering round-trip.
double evaluate_powered(const EnergyFunction& e, const Labeling& x, double p);

/// p-th root of evaluate_powered: the l_p norm of the active cost vector.
double lp_norm(const EnergyFunction& e, const Labeling& x, double p);

/// Largest active cost under x (unpowered). 0 for an empty energy.
double max_term(const EnergyFunction& e, const Labeling& x);

/// Raises every stored cost to the power p, eagerly. Throws NumericRangeError
/// if any powered value overflows to non-finite; normalize() first.
EnergyFunction power_transform(const EnergyFunction& e, double p);

struct Normalized {
    EnergyFunction energy;
    double scale = 1.0;
};

/// Divides every cost by the largest cost, putting all values in [0,1].
/// An all-zero energy is returned unchanged with scale 1. The minimizer set
/// of the powered energy is unchanged for every p.
Normalized normalize(const EnergyFunction& e);

/// Multiplies every cost by s > 0.
EnergyFunction scale_terms(const EnergyFunction& e, double s);

/// Throws DomainError unless p is finite and >= 1.
void require_valid_power(double p);

} // namespace lpcut

#endif
