#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lpcut/oracle.hpp"
#include "lpcut/reduction.hpp"
#include "test_util.hpp"

using namespace lpcut;
using namespace lpcut::test;

namespace {

std::uint32_t mask_of(const Labeling& x) {
    // source side = label 0, so bit i (source membership) is the negation
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == 0)
            mask |= 1u << i;
    return mask;
}

void check_cut_energy_match(const EnergyFunction& e) {
    BuiltNetwork built = build_network(e);
    const int n = e.topology.vertex_count;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        Labeling x(n);
        for (int i = 0; i < n; ++i)
            x[i] = (m >> i) & 1u;
        double cut = crossing_capacity(built.network, mask_of(x));
        double energy = evaluate_powered(e, x, 1.0);
        CHECK(rel_close(cut + built.offset, energy, 1e-9));
    }
}

} // namespace

TEST_CASE("build_network on the two-vertex instance") {
    EnergyFunction e = two_vertex_instance();
    BuiltNetwork built = build_network(e);

    // n-link capacity is cost01 + cost10 - cost00 - cost11 = 2
    bool found_nlink = false;
    for (const auto& arc : built.network.arcs()) {
        if (arc.tail == 0 && arc.head == 1) {
            CHECK(arc.cap == 2.0);
            CHECK(arc.reverse_cap == 0.0);
            found_nlink = true;
        }
    }
    CHECK(found_nlink);
    for (const auto& arc : built.network.arcs()) {
        bool s_to_t = arc.tail == FlowNetwork::source_id &&
                      arc.head == FlowNetwork::sink_id;
        CHECK_FALSE(s_to_t); // the builder never links the terminals directly
    }
    check_cut_energy_match(e);
}

TEST_CASE("build_network shifts per-vertex costs into the offset") {
    EnergyFunction e;
    e.topology.vertex_count = 1;
    e.unaries = {{5.0, 2.0}};
    BuiltNetwork built = build_network(e);
    CHECK(built.offset == 2.0);

    double s_cap = -1.0, t_cap = -1.0;
    for (const auto& arc : built.network.arcs()) {
        if (arc.tail == FlowNetwork::source_id)
            s_cap = arc.cap;
        if (arc.head == FlowNetwork::sink_id)
            t_cap = arc.cap;
    }
    CHECK(s_cap == 0.0);
    CHECK(t_cap == 3.0);

    CutResult r = built.network.max_flow();
    CHECK(r.flow_value == 0.0);
    CHECK(r.side[0] == CutSide::sink); // label 1, energy 2
}

TEST_CASE("build_network on an all-zero energy") {
    EnergyFunction e;
    e.topology.vertex_count = 3;
    e.topology.edges = {{0, 1}, {1, 2}};
    e.unaries.assign(3, {});
    e.pairwise.assign(2, {});
    BuiltNetwork built = build_network(e);
    CHECK(built.offset == 0.0);
    for (const auto& arc : built.network.arcs()) {
        CHECK(arc.cap == 0.0);
        CHECK(arc.reverse_cap == 0.0);
    }
    CHECK(built.network.max_flow().flow_value == 0.0);
}

TEST_CASE("build_network rejects non-submodular tables") {
    EnergyFunction e = two_vertex_instance();
    e.pairwise[0] = {5.0, 1.0, 1.0, 0.0};
    CHECK_THROWS_AS(build_network(e), ReductionError);
    try {
        build_network(e);
    } catch (const ReductionError& ex) {
        CHECK(ex.edge_index() == 0);
    }

    // an exact tie is fine: capacity clamps to zero
    e.pairwise[0] = {1.0, 1.0, 1.0, 1.0};
    CHECK_NOTHROW(build_network(e));
}

TEST_CASE("cut + offset equals the energy for every labeling") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.below(8));
        EnergyFunction e =
            random_instance(n, 2.0, TermPolicy::submodular, 1000 + trial);
        check_cut_energy_match(e);
    }
}

TEST_CASE("solve on the two-vertex instance") {
    EnergyFunction e = two_vertex_instance();

    Solution s1 = solve(e, 1.0);
    CHECK(s1.labeling == lab("01"));
    CHECK(s1.powered_energy == 1.0);
    CHECK(s1.lp_value == 1.0);
    CHECK(s1.max_term == 1.0);
    CHECK(rel_close(s1.flow_value + s1.offset,
                    evaluate_powered(power_transform(normalize(e).energy, 1.0),
                                     s1.labeling, 1.0),
                    1e-9));

    Solution s8 = solve(e, 8.0);
    CHECK(s8.labeling == lab("01")); // powering these tables changes nothing
    CHECK(s8.powered_energy == 1.0);
}

TEST_CASE("solve enforces its certification policy") {
    EnergyFunction e = two_vertex_instance();
    e.pairwise[0] = {3.0, 2.0, 2.0, 0.0};

    // certified policy: refused at any p, with the edge named
    CHECK_THROWS_AS(solve(e, 1.0), CertificationError);
    try {
        solve(e, 2.0);
    } catch (const CertificationError& ex) {
        REQUIRE(ex.issues().size() == 1);
        CHECK(ex.issues()[0].edge_index == 0);
        CHECK(ex.issues()[0].i == 0);
        CHECK(ex.issues()[0].j == 1);
        CHECK(ex.issues()[0].status == CertStatus::submodular_uncertified);
    }

    // per-p policy: fine at p=1, refused at p=2 (the squared table)
    CHECK_NOTHROW(solve(e, 1.0, SolvePolicy::allow_per_p_check));
    CHECK_THROWS_AS(solve(e, 2.0, SolvePolicy::allow_per_p_check), CertificationError);

    CHECK_THROWS_AS(solve(e, 0.5), DomainError);
}

TEST_CASE("solve matches the exhaustive minimum") {
    Rng rng(50);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng.below(11));
        EnergyFunction e =
            random_instance(n, 1.0 + rng.uniform(0.0, 2.0), TermPolicy::certified,
                            2000 + trial);
        // 64 sits far beyond the small powers on purpose: powered capacities
        // then span ~60 orders of magnitude and exercise the exact-residual
        // augmentation rule
        for (double p : {1.0, 2.0, 4.0, 8.0, 64.0}) {
            Solution s = solve(e, p);
            OracleResult oracle = brute_force_min(e, p);
            CHECK(rel_close(s.powered_energy, oracle.min_value, 1e-6));
        }
    }
}

TEST_CASE("solution invariants hold") {
    for (int trial = 0; trial < 10; ++trial) {
        EnergyFunction e = random_instance(9, 2.0, TermPolicy::certified, 3000 + trial);
        for (double p : {1.0, 3.0, 16.0}) {
            Solution s = solve(e, p);
            CHECK(rel_close(s.powered_energy, evaluate_powered(e, s.labeling, p), 1e-9));
            CHECK(rel_close(s.lp_value, std::pow(s.powered_energy, 1.0 / p), 1e-9));
            CHECK(s.max_term == max_term(e, s.labeling));
            CHECK(brute_force_minimax(e).min_value <= s.max_term * (1 + 1e-12));
            EnergyFunction powered = power_transform(normalize(e).energy, p);
            CHECK(rel_close(s.flow_value + s.offset,
                            evaluate_powered(powered, s.labeling, 1.0), 1e-9));
        }
    }
}

TEST_CASE("scaling all terms does not move the solution") {
    int kept = 0;
    for (int trial = 0; kept < 10 && trial < 40; ++trial) {
        EnergyFunction e = random_instance(8, 2.0, TermPolicy::certified, 4000 + trial);
        if (brute_force_min(e, 2.0).minimizers.size() != 1)
            continue;
        ++kept;
        Labeling base = solve(e, 2.0).labeling;
        for (double s : {0.01, 137.0})
            CHECK(solve(scale_terms(e, s), 2.0).labeling == base);
    }
    CHECK(kept == 10);
}

TEST_CASE("large p recovers the minimax value") {
    int kept = 0;
    for (int trial = 0; kept < 10 && trial < 60; ++trial) {
        int n = 4 + trial % 9;
        EnergyFunction e = random_instance(n, 1.5, TermPolicy::certified, 5000 + trial);
        OracleResult minimax = brute_force_minimax(e);
        if (minimax.minimizers.size() != 1)
            continue;
        ++kept;
        Solution s = solve(e, 64.0);
        CHECK(rel_close(s.max_term, minimax.min_value, 1e-6));
    }
    CHECK(kept == 10);
}
