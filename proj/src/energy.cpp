#include "lpcut/energy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace lpcut {

double PairwiseTerm::max_value() const {
    return std::max({cost00, cost01, cost10, cost11});
}

namespace {

bool valid_cost(double v) {
    return std::isfinite(v) && v >= 0.0;
}

double active_unary(const UnaryTerm& u, std::uint8_t label) {
    return label ? u.cost1 : u.cost0;
}

double active_pairwise(const PairwiseTerm& t, std::uint8_t xi, std::uint8_t xj) {
    if (xi == 0)
        return xj == 0 ? t.cost00 : t.cost01;
    return xj == 0 ? t.cost10 : t.cost11;
}

void check_labeling(const EnergyFunction& e, const Labeling& x) {
    if (static_cast<int>(x.size()) != e.topology.vertex_count)
        throw InputError("labeling has " + std::to_string(x.size()) +
                         " entries for " + std::to_string(e.topology.vertex_count) +
                         " vertices");
    for (std::uint8_t v : x)
        if (v > 1)
            throw InputError("labeling entries must be 0 or 1");
}

template <class Fn>
void for_each_value(EnergyFunction& e, Fn&& fn) {
    for (auto& u : e.unaries) {
        fn(u.cost0);
        fn(u.cost1);
    }
    for (auto& t : e.pairwise) {
        fn(t.cost00);
        fn(t.cost01);
        fn(t.cost10);
        fn(t.cost11);
    }
}

double max_cost_value(const EnergyFunction& e) {
    double m = 0.0;
    for (const auto& u : e.unaries)
        m = std::max({m, u.cost0, u.cost1});
    for (const auto& t : e.pairwise)
        m = std::max(m, t.max_value());
    return m;
}

} // namespace

void validate(const EnergyFunction& e) {
    const auto& topo = e.topology;
    if (topo.vertex_count < 0)
        throw InputError("vertex_count must be non-negative");
    if (static_cast<int>(e.unaries.size()) != topo.vertex_count)
        throw InputError("unary list length " + std::to_string(e.unaries.size()) +
                         " does not match vertex_count " + std::to_string(topo.vertex_count));
    if (e.pairwise.size() != topo.edges.size())
        throw InputError("pairwise list length " + std::to_string(e.pairwise.size()) +
                         " does not match edge count " + std::to_string(topo.edges.size()));

    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < topo.edges.size(); ++k) {
        auto [i, j] = topo.edges[k];
        if (i < 0 || j < 0 || i >= topo.vertex_count || j >= topo.vertex_count)
            throw InputError("edge " + std::to_string(k) + " endpoint out of range");
        if (i == j)
            throw InputError("edge " + std::to_string(k) + " is a self-loop");
        auto key = std::minmax(i, j);
        if (!seen.insert({key.first, key.second}).second)
            throw InputError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                             ") appears more than once");
    }

    for (const auto& u : e.unaries)
        if (!valid_cost(u.cost0) || !valid_cost(u.cost1))
            throw InputError("unary costs must be finite and non-negative");
    for (const auto& t : e.pairwise)
        if (!valid_cost(t.cost00) || !valid_cost(t.cost01) ||
            !valid_cost(t.cost10) || !valid_cost(t.cost11))
            throw InputError("pairwise costs must be finite and non-negative");
}

void require_valid_power(double p) {
    if (!std::isfinite(p) || p < 1.0)
        throw DomainError("p must be a finite real >= 1, got " + std::to_string(p));
}

double evaluate_powered(const EnergyFunction& e, const Labeling& x, double p) {
    require_valid_power(p);
    check_labeling(e, x);
    double sum = 0.0;
    if (p == 1.0) {
        for (int i = 0; i < e.topology.vertex_count; ++i)
            sum += active_unary(e.unaries[i], x[i]);
        for (std::size_t k = 0; k < e.topology.edges.size(); ++k) {
            auto [i, j] = e.topology.edges[k];
            sum += active_pairwise(e.pairwise[k], x[i], x[j]);
        }
        return sum;
    }
    for (int i = 0; i < e.topology.vertex_count; ++i)
        sum += std::pow(active_unary(e.unaries[i], x[i]), p);
    for (std::size_t k = 0; k < e.topology.edges.size(); ++k) {
        auto [i, j] = e.topology.edges[k];
        sum += std::pow(active_pairwise(e.pairwise[k], x[i], x[j]), p);
    }
    return sum;
}

double lp_norm(const EnergyFunction& e, const Labeling& x, double p) {
    double powered = evaluate_powered(e, x, p);
    if (p == 1.0)
        return powered;
    return std::pow(powered, 1.0 / p);
}

double max_term(const EnergyFunction& e, const Labeling& x) {
    check_labeling(e, x);
    double m = 0.0;
    for (int i = 0; i < e.topology.vertex_count; ++i)
        m = std::max(m, active_unary(e.unaries[i], x[i]));
    for (std::size_t k = 0; k < e.topology.edges.size(); ++k) {
        auto [i, j] = e.topology.edges[k];
        m = std::max(m, active_pairwise(e.pairwise[k], x[i], x[j]));
    }
    return m;
}

EnergyFunction power_transform(const EnergyFunction& e, double p) {
    require_valid_power(p);
    EnergyFunction out = e;
    if (p == 1.0)
        return out;
    bool finite = true;
    for_each_value(out, [&](double& v) {
        v = std::pow(v, p);
        if (!std::isfinite(v))
            finite = false;
    });
    if (!finite)
        throw NumericRangeError("powered cost overflowed the double range; "
                                "normalize() the energy before powering");
    return out;
}

Normalized normalize(const EnergyFunction& e) {
    double scale = max_cost_value(e);
    if (scale <= 0.0)
        return {e, 1.0};
    EnergyFunction out = e;
    for_each_value(out, [&](double& v) { v /= scale; });
    return {std::move(out), scale};
}

EnergyFunction scale_terms(const EnergyFunction& e, double s) {
    if (!std::isfinite(s) || s <= 0.0)
        throw InputError("scale factor must be finite and positive");
    EnergyFunction out = e;
    for_each_value(out, [&](double& v) { v *= s; });
    return out;
}

} // namespace lpcut
