#ifndef LPCUT_ORACLE_HPP
#define LPCUT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "lpcut/energy.hpp"

namespace lpcut {

/// Result of an exhaustive scan over all 2^n labelings. minimizers holds
/// every labeling whose objective is within 1e-12 * max(1, min_value) of the
/// minimum, in ascending bitmask order (vertex 0 is the lowest bit).
struct OracleResult {
    double min_value = 0.0;
    std::vector<Labeling> minimizers;
};

/// Exhaustive minimum of the powered energy. Refuses more than 20 vertices.
OracleResult brute_force_min(const EnergyFunction& e, double p);

/// Exhaustive minimum of the largest active term (the p -> infinity
/// objective). Refuses more than 20 vertices.
OracleResult brute_force_minimax(const EnergyFunction& e);

enum class TermPolicy {
    any,        // tables unconstrained
    submodular, // tables submodular at p = 1
    certified,  // tables certified submodular for all p
};

/// Deterministic random instance: a random spanning tree extended with random
/// extra edges up to floor(edge_factor * n) total (capped at the complete
/// graph), unaries uniform in [0,10], pairwise tables drawn uniform in
/// [0,10]^4 and rejection-sampled until term_policy holds.
EnergyFunction random_instance(int n, double edge_factor, TermPolicy term_policy,
                               std::uint64_t seed);

} // namespace lpcut

#endif
