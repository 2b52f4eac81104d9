#include "lpcut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "lpcut/rng.hpp"
#include "lpcut/submodular.hpp"

namespace lpcut {

namespace {

constexpr int max_oracle_vertices = 20;

void check_size(const EnergyFunction& e) {
    if (e.topology.vertex_count > max_oracle_vertices)
        throw SizeError("exhaustive scan refused: " +
                        std::to_string(e.topology.vertex_count) + " vertices exceeds " +
                        std::to_string(max_oracle_vertices));
}

Labeling labeling_from_mask(std::uint32_t mask, int n) {
    Labeling x(n);
    for (int i = 0; i < n; ++i)
        x[i] = (mask >> i) & 1u;
    return x;
}

// Shared scan: objective(mask) must be deterministic and cheap.
template <class Objective>
OracleResult exhaustive_argmin(int n, Objective&& objective) {
    const std::uint64_t count = std::uint64_t{1} << n;
    double best = objective(0u);
    for (std::uint64_t mask = 1; mask < count; ++mask)
        best = std::min(best, objective(static_cast<std::uint32_t>(mask)));

    OracleResult result;
    result.min_value = best;
    const double window = 1e-12 * std::max(1.0, best);
    for (std::uint64_t mask = 0; mask < count; ++mask)
        if (objective(static_cast<std::uint32_t>(mask)) <= best + window)
            result.minimizers.push_back(labeling_from_mask(static_cast<std::uint32_t>(mask), n));
    return result;
}

} // namespace

OracleResult brute_force_min(const EnergyFunction& e, double p) {
    require_valid_power(p);
    validate(e);
    check_size(e);
    const int n = e.topology.vertex_count;
    const auto& edges = e.topology.edges;

    // Power the tables once; the per-labeling pass is then plain sums, in the
    // same term order as evaluate_powered so the values match bit for bit.
    const EnergyFunction powered = power_transform(e, p);

    auto objective = [&](std::uint32_t mask) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            sum += (mask >> i) & 1u ? powered.unaries[i].cost1 : powered.unaries[i].cost0;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            auto [i, j] = edges[k];
            const PairwiseTerm& t = powered.pairwise[k];
            bool xi = (mask >> i) & 1u;
            bool xj = (mask >> j) & 1u;
            sum += xi ? (xj ? t.cost11 : t.cost10) : (xj ? t.cost01 : t.cost00);
        }
        return sum;
    };
    return exhaustive_argmin(n, objective);
}

OracleResult brute_force_minimax(const EnergyFunction& e) {
    validate(e);
    check_size(e);
    const int n = e.topology.vertex_count;
    const auto& edges = e.topology.edges;

    auto objective = [&](std::uint32_t mask) {
        double m = 0.0;
        for (int i = 0; i < n; ++i)
            m = std::max(m, (mask >> i) & 1u ? e.unaries[i].cost1 : e.unaries[i].cost0);
        for (std::size_t k = 0; k < edges.size(); ++k) {
            auto [i, j] = edges[k];
            const PairwiseTerm& t = e.pairwise[k];
            bool xi = (mask >> i) & 1u;
            bool xj = (mask >> j) & 1u;
            m = std::max(m, xi ? (xj ? t.cost11 : t.cost10) : (xj ? t.cost01 : t.cost00));
        }
        return m;
    };
    return exhaustive_argmin(n, objective);
}

namespace {

bool term_acceptable(const PairwiseTerm& t, TermPolicy policy) {
    switch (policy) {
    case TermPolicy::any: return true;
    case TermPolicy::submodular: return is_submodular(t);
    case TermPolicy::certified:
        return certify_all_p(t).status == CertStatus::certified_all_p;
    }
    return false;
}

} // namespace

EnergyFunction random_instance(int n, double edge_factor, TermPolicy term_policy,
                               std::uint64_t seed) {
    if (n < 1)
        throw InputError("random_instance needs at least one vertex");
    if (edge_factor < 0.0 || !std::isfinite(edge_factor))
        throw InputError("edge_factor must be finite and non-negative");

    Rng rng(seed);
    EnergyFunction e;
    e.topology.vertex_count = n;

    // Spanning tree over a shuffled vertex order, then extra edges by
    // rejection. Draw order is fixed: topology, then unaries, then tables.
    if (n > 1) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (int k = n - 1; k > 0; --k)
            std::swap(order[k], order[rng.below(static_cast<std::uint64_t>(k) + 1)]);

        std::set<std::pair<int, int>> used;
        auto try_add = [&](int i, int j) {
            auto key = std::minmax(i, j);
            if (!used.insert({key.first, key.second}).second)
                return false;
            e.topology.edges.emplace_back(i, j);
            return true;
        };

        for (int k = 1; k < n; ++k)
            try_add(order[rng.below(static_cast<std::uint64_t>(k))], order[k]);

        const std::size_t complete = static_cast<std::size_t>(n) * (n - 1) / 2;
        const std::size_t target =
            std::min(std::max<std::size_t>(n - 1, static_cast<std::size_t>(edge_factor * n)),
                     complete);
        std::uint64_t attempts = 0;
        const std::uint64_t attempt_cap = 1000ull * static_cast<std::uint64_t>(n) * n;
        while (e.topology.edges.size() < target && attempts < attempt_cap) {
            ++attempts;
            int i = static_cast<int>(rng.below(n));
            int j = static_cast<int>(rng.below(n));
            if (i != j)
                try_add(i, j);
        }
        // Near-complete targets can starve rejection; finish deterministically.
        for (int i = 0; i < n && e.topology.edges.size() < target; ++i)
            for (int j = i + 1; j < n && e.topology.edges.size() < target; ++j)
                try_add(i, j);
    }

    e.unaries.reserve(n);
    for (int i = 0; i < n; ++i)
        e.unaries.push_back({rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)});

    e.pairwise.reserve(e.topology.edges.size());
    for (std::size_t k = 0; k < e.topology.edges.size(); ++k) {
        PairwiseTerm t;
        do {
            t = {rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0),
                 rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)};
        } while (!term_acceptable(t, term_policy));
        e.pairwise.push_back(t);
    }
    return e;
}

} // namespace lpcut
