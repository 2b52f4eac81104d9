#include "lpcut/submodular.hpp"

#include <algorithm>
#include <cmath>

namespace lpcut {

namespace {

double tolerance_for(double max_value) {
    return 1e-12 * std::max(1.0, max_value);
}

} // namespace

const char* to_string(CertStatus s) {
    switch (s) {
    case CertStatus::certified_all_p: return "CERTIFIED_ALL_P";
    case CertStatus::submodular_uncertified: return "SUBMODULAR_UNCERTIFIED";
    case CertStatus::not_submodular: return "NOT_SUBMODULAR";
    }
    return "?";
}

bool is_submodular(const PairwiseTerm& t) {
    return t.cost00 + t.cost11 <= t.cost01 + t.cost10 + tolerance_for(t.max_value());
}

bool max_condition(const PairwiseTerm& t) {
    return std::max(t.cost00, t.cost11) <=
           std::max(t.cost10, t.cost01) + tolerance_for(t.max_value());
}

Certificate certify_all_p(const PairwiseTerm& t) {
    if (!is_submodular(t))
        return {CertStatus::not_submodular, std::nullopt};
    if (!max_condition(t))
        return {CertStatus::submodular_uncertified, std::nullopt};
    return {CertStatus::certified_all_p, std::nullopt};
}

bool is_submodular_at(const PairwiseTerm& t, double p) {
    require_valid_power(p);
    double m = t.max_value();
    if (m <= 0.0)
        return true;
    double a = std::pow(t.cost00 / m, p);
    double b = std::pow(t.cost01 / m, p);
    double c = std::pow(t.cost10 / m, p);
    double d = std::pow(t.cost11 / m, p);
    return a + d <= b + c + tolerance_for(std::max({a, b, c, d}));
}

bool power_dominance_check(double x0, double x1, double y0, double y1, double p) {
    if (x0 + x1 > y0 + y1 || std::max(x0, x1) > std::max(y0, y1))
        return true; // hypotheses fail, implication vacuous
    double m = std::max({x0, x1, y0, y1});
    if (m <= 0.0)
        return true;
    double lhs = std::pow(x0 / m, p) + std::pow(x1 / m, p);
    double rhs = std::pow(y0 / m, p) + std::pow(y1 / m, p);
    return lhs <= rhs + 1e-12;
}

std::optional<double> find_violation(const PairwiseTerm& t,
                                     std::span<const double> p_grid) {
    if (p_grid.empty())
        throw InputError("p grid must be non-empty");
    for (std::size_t k = 0; k < p_grid.size(); ++k) {
        if (p_grid[k] < 1.0 || !std::isfinite(p_grid[k]))
            throw DomainError("p grid entries must be finite reals >= 1");
        if (k > 0 && p_grid[k] <= p_grid[k - 1])
            throw InputError("p grid must be sorted strictly ascending");
    }
    for (double p : p_grid)
        if (!is_submodular_at(t, p))
            return p;
    return std::nullopt;
}

} // namespace lpcut
