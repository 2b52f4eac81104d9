#ifndef LPCUT_SUBMODULAR_HPP
#define LPCUT_SUBMODULAR_HPP

#include <optional>
#include <span>

#include "lpcut/energy.hpp"

namespace lpcut {

/// Outcome of the all-p certification of a pairwise term.
///
/// certified_all_p      — cost00 + cost11 <= cost01 + cost10 AND
///                        max(cost00, cost11) <= max(cost10, cost01);
///                        the powered term stays submodular for every p >= 1.
/// submodular_uncertified — submodular at p = 1 but the max condition fails;
///                        the powered term may lose submodularity (the
///                        condition is sufficient, not necessary), so callers
///                        must check per p.
/// not_submodular       — already fails at p = 1.
enum class CertStatus {
    certified_all_p,
    submodular_uncertified,
    not_submodular,
};

const char* to_string(CertStatus s);

struct Certificate {
    CertStatus status = CertStatus::not_submodular;
    /// Populated only by empirical scans (find_violation), never by
    /// certify_all_p.
    std::optional<double> violation_p;
};

/// cost00 + cost11 <= cost01 + cost10, with additive tolerance
/// 1e-12 * max(1, largest table value) so exact ties count as submodular.
bool is_submodular(const PairwiseTerm& t);

/// max(cost00, cost11) <= max(cost10, cost01), same tolerance policy.
bool max_condition(const PairwiseTerm& t);

/// Three-state certificate; see CertStatus.
Certificate certify_all_p(const PairwiseTerm& t);

/// Submodularity of the term raised to the power p, evaluated on the term
/// normalized to [0,1] so p up to 64 stays in floating-point range.
bool is_submodular_at(const PairwiseTerm& t, double p);

/// True unless x0,x1 is dominated by y0,y1 in both sum and max while the
/// powered sums reverse, i.e. the value of the implication
///   (x0+x1 <= y0+y1 and max(x0,x1) <= max(y0,y1))  =>  x0^p+x1^p <= y0^p+y1^p.
/// Expected to hold for every non-negative quadruple and every p > 1.
bool power_dominance_check(double x0, double x1, double y0, double y1, double p);

/// Smallest p in the ascending grid at which is_submodular_at fails, or
/// nullopt. Throws DomainError if any grid entry is < 1, InputError if the
/// grid is empty or unsorted.
std::optional<double> find_violation(const PairwiseTerm& t,
                                     std::span<const double> p_grid);

} // namespace lpcut

#endif
