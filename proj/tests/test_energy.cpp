#include <doctest.h>

#include <cmath>

#include "lpcut/energy.hpp"
#include "lpcut/oracle.hpp"
#include "test_util.hpp"

using namespace lpcut;
using namespace lpcut::test;

namespace {

EnergyFunction single_vertex_52() {
    EnergyFunction e;
    e.topology.vertex_count = 1;
    e.unaries = {{5.0, 2.0}};
    return e;
}

} // namespace

TEST_CASE("evaluate_powered on the worked examples") {
    CHECK(evaluate_powered(single_vertex_52(), lab("1"), 1.0) == 2.0);

    EnergyFunction e = two_vertex_instance();
    CHECK(evaluate_powered(e, lab("01"), 1.0) == 1.0);
    CHECK(evaluate_powered(e, lab("01"), 2.0) == 1.0);
    // the other three labelings, frozen from the 4-labeling enumeration
    CHECK(evaluate_powered(e, lab("00"), 1.0) == 10.0);
    CHECK(evaluate_powered(e, lab("10"), 1.0) == 21.0);
    CHECK(evaluate_powered(e, lab("11"), 1.0) == 10.0);
}

TEST_CASE("evaluate_powered rejects bad input") {
    EnergyFunction e = two_vertex_instance();
    CHECK_THROWS_AS(evaluate_powered(e, lab("0"), 1.0), InputError);
    CHECK_THROWS_AS(evaluate_powered(e, Labeling{0, 2}, 1.0), InputError);
    CHECK_THROWS_AS(evaluate_powered(e, lab("01"), 0.5), DomainError);
    CHECK_THROWS_AS(evaluate_powered(e, lab("01"),
                                     std::numeric_limits<double>::infinity()),
                    DomainError);
    CHECK_THROWS_AS(evaluate_powered(e, lab("01"), std::nan("")), DomainError);
}

TEST_CASE("lp_norm") {
    EnergyFunction e = two_vertex_instance();
    CHECK(lp_norm(e, lab("01"), 2.0) == 1.0);

    // two active terms 3 and 4: (3^2 + 4^2)^(1/2) = 5
    EnergyFunction pair;
    pair.topology.vertex_count = 2;
    pair.unaries = {{3.0, 0.0}, {4.0, 0.0}};
    CHECK(lp_norm(pair, lab("00"), 2.0) == doctest::Approx(5.0).epsilon(1e-12));

    // p = 1 agrees with the plain sum exactly
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        EnergyFunction r = random_instance(6, 2.0, TermPolicy::any, seed);
        Rng rng(seed * 7);
        Labeling x(6);
        for (auto& v : x)
            v = static_cast<std::uint8_t>(rng.below(2));
        CHECK(lp_norm(r, x, 1.0) == evaluate_powered(r, x, 1.0));
    }
}

TEST_CASE("max_term") {
    CHECK(max_term(two_vertex_instance(), lab("01")) == 1.0);
    CHECK(max_term(single_vertex_52(), lab("0")) == 5.0);
    CHECK(max_term(EnergyFunction{}, Labeling{}) == 0.0);
}

TEST_CASE("power_transform") {
    EnergyFunction e;
    e.topology.vertex_count = 2;
    e.topology.edges = {{0, 1}};
    e.unaries = {{0.0, 0.0}, {0.0, 0.0}};
    e.pairwise = {{3.0, 2.0, 2.0, 0.0}};

    EnergyFunction squared = power_transform(e, 2.0);
    CHECK(squared.pairwise[0] == PairwiseTerm{9.0, 4.0, 4.0, 0.0});

    CHECK(power_transform(e, 1.0) == e);

    e.pairwise = {{0.0, 1.0, 1.0, 0.0}};
    CHECK(power_transform(e, 3.0) == e); // 0 and 1 are fixed points

    e.pairwise = {{0.0, 1e5, 1e5, 0.0}};
    CHECK_THROWS_AS(power_transform(e, 64.0), NumericRangeError);
}

TEST_CASE("power_transform commutes with evaluation") {
    for (std::uint64_t seed : {21u, 22u, 23u, 24u}) {
        EnergyFunction e = random_instance(7, 2.0, TermPolicy::any, seed);
        Rng rng(seed + 100);
        Labeling x(7);
        for (auto& v : x)
            v = static_cast<std::uint8_t>(rng.below(2));
        for (double q : {2.0, 3.0}) {
            for (double p : {1.0, 2.0, 4.0}) {
                double direct = evaluate_powered(e, x, p * q);
                double staged = evaluate_powered(power_transform(e, q), x, p);
                CHECK(rel_close(direct, staged, 1e-9));
            }
        }
    }
}

TEST_CASE("normalize") {
    EnergyFunction e;
    e.topology.vertex_count = 2;
    e.topology.edges = {{0, 1}};
    e.unaries = {{0.0, 2.0}, {0.0, 0.0}};
    e.pairwise = {{0.0, 4.0, 2.0, 0.0}};

    auto [scaled, scale] = normalize(e);
    CHECK(scale == 4.0);
    CHECK(scaled.unaries[0] == UnaryTerm{0.0, 0.5});
    CHECK(scaled.pairwise[0] == PairwiseTerm{0.0, 1.0, 0.5, 0.0});

    EnergyFunction zero;
    zero.topology.vertex_count = 2;
    zero.unaries = {{0.0, 0.0}, {0.0, 0.0}};
    auto [same, one] = normalize(zero);
    CHECK(one == 1.0);
    CHECK(same == zero);

    auto [tv, tv_scale] = normalize(two_vertex_instance());
    CHECK(tv_scale == 10.0);
    CHECK(tv.unaries[0] == UnaryTerm{0.0, 1.0});
    CHECK(tv.unaries[1] == UnaryTerm{1.0, 0.0});
    CHECK(tv.pairwise[0] == PairwiseTerm{0.0, 0.1, 0.1, 0.0});
    CHECK(brute_force_min(tv, 2.0).minimizers == std::vector<Labeling>{lab("01")});
}

TEST_CASE("normalize keeps the minimizer set at every p") {
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 13); // up to 14 vertices
        EnergyFunction e = random_instance(n, 2.0, TermPolicy::any, seed);
        EnergyFunction scaled = normalize(e).energy;
        for (double p : {1.0, 2.0, 4.0, 8.0})
            CHECK(brute_force_min(e, p).minimizers ==
                  brute_force_min(scaled, p).minimizers);
    }
}

TEST_CASE("lp_norm approaches the max term as p grows") {
    for (std::uint64_t seed = 50; seed < 58; ++seed) {
        // <= 14 vertices and <= 3n edges keeps the instance under 50 terms
        int n = 2 + static_cast<int>(seed % 13);
        EnergyFunction e = normalize(random_instance(n, 2.0, TermPolicy::any, seed)).energy;
        Rng rng(seed ^ 0xabcd);
        Labeling x(n);
        for (auto& v : x)
            v = static_cast<std::uint8_t>(rng.below(2));
        double m = max_term(e, x);
        if (m <= 0.0)
            continue;
        CHECK(std::abs(lp_norm(e, x, 64.0) - m) <= 0.15 * m);
        CHECK(lp_norm(e, x, 64.0) >= m - 1e-12);
    }
}

TEST_CASE("values stay non-negative") {
    for (std::uint64_t seed = 60; seed < 64; ++seed) {
        EnergyFunction e = random_instance(5, 2.0, TermPolicy::any, seed);
        Rng rng(seed);
        Labeling x(5);
        for (auto& v : x)
            v = static_cast<std::uint8_t>(rng.below(2));
        for (double p : {1.0, 3.0, 17.0}) {
            CHECK(evaluate_powered(e, x, p) >= 0.0);
            CHECK(lp_norm(e, x, p) >= 0.0);
        }
    }
}

TEST_CASE("validate catches malformed energies") {
    EnergyFunction e = two_vertex_instance();
    CHECK_NOTHROW(validate(e));

    EnergyFunction bad = e;
    bad.unaries.pop_back();
    CHECK_THROWS_AS(validate(bad), InputError);

    bad = e;
    bad.topology.edges.push_back({1, 0}); // duplicate in the other orientation
    bad.pairwise.push_back({});
    CHECK_THROWS_AS(validate(bad), InputError);

    bad = e;
    bad.topology.edges[0] = {0, 0};
    CHECK_THROWS_AS(validate(bad), InputError);

    bad = e;
    bad.topology.edges[0] = {0, 5};
    CHECK_THROWS_AS(validate(bad), InputError);

    bad = e;
    bad.unaries[0].cost0 = -1.0;
    CHECK_THROWS_AS(validate(bad), InputError);

    bad = e;
    bad.pairwise[0].cost11 = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate(bad), InputError);
}

TEST_CASE("scale_terms") {
    EnergyFunction e = two_vertex_instance();
    EnergyFunction doubled = scale_terms(e, 2.0);
    CHECK(doubled.unaries[0].cost1 == 20.0);
    CHECK(doubled.pairwise[0].cost01 == 2.0);
    CHECK_THROWS_AS(scale_terms(e, 0.0), InputError);
    CHECK_THROWS_AS(scale_terms(e, -1.0), InputError);
}
