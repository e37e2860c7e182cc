#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdl/family.hpp"

namespace rdl {

/// A dual-side witness (u, y_u*) given by labels.
struct DualWitness {
  std::string u;
  std::string y_star;
  friend bool operator==(const DualWitness&, const DualWitness&) = default;
};

/// Outcome of comparing a duality property (lhs) with its set-valued
/// characterization (rhs). On finite grids the two always agree.
struct TheoremCheck {
  bool lhs = false;
  bool rhs = false;
  /// The "for all small eps" form of the characterization, where one exists.
  std::optional<bool> rhs_local;
  std::optional<DualWitness> witness;
  bool agrees() const noexcept { return lhs == rhs && rhs_local.value_or(rhs) == rhs; }
};

/// Three equivalent statements at a primal point.
struct TripleCheck {
  bool i = false;
  bool ii = false;
  bool iii = false;
  bool agrees() const noexcept { return i == ii && ii == iii; }
};

struct DualityVerdict {
  std::string x_star;
  ExtReal p_star;
  ExtReal q_val;
  bool robust = false;
  bool strong = false;
  bool reverse_strong = false;
  bool minmax = false;
  /// Set when p*(x*) = q(x*) = -inf: counted as robust but not strong.
  bool both_neg_inf = false;
  std::optional<DualWitness> dual_witness;
  std::optional<std::string> primal_witness;
  std::map<std::string, TheoremCheck> checks;
};

struct PointChecks {
  std::string x;
  TripleCheck subdifferential_formula;
  TripleCheck brsc;
};

struct DualityReport {
  std::vector<DualityVerdict> verdicts;
  TheoremCheck stable_robust;
  TheoremCheck stable_strong;
  std::vector<PointChecks> point_checks;  // one per x with p(x) finite
  std::vector<std::string> notes;
  double tol = kDefaultTol;
};

struct DiagnoseOptions {
  double tol = kDefaultTol;
  /// Extra eps values to test on top of the generated breakpoint grid.
  std::vector<double> extra_eps;
  bool theorem_checks = true;
};

/// Check identifiers used in DualityVerdict::checks.
inline constexpr std::string_view kCheckRobust = "robust_characterization";
inline constexpr std::string_view kCheckStrong = "strong_characterization";
inline constexpr std::string_view kCheckReverse = "reverse_characterization";
inline constexpr std::string_view kCheckMinmax = "minmax_characterization";

/// Values and the four properties at x*, plus the characterization checks.
/// Throws InternalInconsistency if a check disagrees with its property.
DualityVerdict diagnose_point(const PerturbationFamily& fam, std::string_view x_star,
                              const DiagnoseOptions& opts = {});

/// Robust duality at x* against (M^eps p)(x*) = A^eps(x*) for every eps in the grid.
TheoremCheck check_theorem_robust(const PerturbationFamily& fam, std::string_view x_star,
                                  const std::vector<double>& eps_grid, double tol = kDefaultTol);

/// Strong robust duality at x* against a single (u, y*) with (M^eps p)(x*) = B^eps_(u,y*)(x*).
TheoremCheck check_theorem_strong(const PerturbationFamily& fam, std::string_view x_star,
                                  const std::vector<double>& eps_grid, double tol = kDefaultTol);

/// Reverse strong duality against (Mp)(x*) = A^0(x*). Needs (Mp)(x*) nonempty.
TheoremCheck check_theorem_reverse(const PerturbationFamily& fam, std::string_view x_star,
                                   double tol = kDefaultTol);

/// Min-max duality against a single (u, y*) with (Mp)(x*) = B^0_(u,y*)(x*).
TheoremCheck check_theorem_minmax(const PerturbationFamily& fam, std::string_view x_star,
                                  double tol = kDefaultTol);

struct StableChecks {
  TheoremCheck stable_robust;
  TheoremCheck stable_strong;
};

/// Stable robust / stable strong duality against eps-subdifferential formulas
/// with C^eps and D^eps at every x and every eps in the grid.
StableChecks check_stable(const PerturbationFamily& fam, const std::vector<double>& eps_grid,
                          double tol = kDefaultTol);

/// At x with p(x) finite: i = (dp(x) = C(x)), ii = reverse strong duality on
/// dp(x), iii = robust duality on dp(x).
TripleCheck check_subdiff_formula(const PerturbationFamily& fam, std::string_view x, double tol = kDefaultTol);

/// At x with p(x) finite: i = (dp(x) = D(x)), ii = min-max duality on dp(x),
/// iii = strong duality on dp(x).
TripleCheck check_brsc(const PerturbationFamily& fam, std::string_view x, double tol = kDefaultTol);

/// Every property and check at every x* and x.
DualityReport diagnose(const PerturbationFamily& fam, const DiagnoseOptions& opts = {});

/// Test values of eps for the mappings at x*: grid_from_breakpoints(breakpoints_at(...)).
std::vector<double> epsilon_grid_at(const PerturbationFamily& fam, std::size_t x_star, double tol = kDefaultTol);

/// Test values of eps for the subdifferential-type mappings in x: grid_from_breakpoints(breakpoints(...)).
std::vector<double> epsilon_grid(const PerturbationFamily& fam, double tol = kDefaultTol);

/// Distinct positive values at which the mappings at x* can change, sorted
/// and unclustered: gaps to p*(x*), to q(x*), every two-gap sum and every
/// activity gap.
std::vector<double> breakpoints_at(const PerturbationFamily& fam, std::size_t x_star);

/// Distinct positive values of p(x) - <x*, x> + p*(x*) and + q(x*) over the grid.
std::vector<double> breakpoints(const PerturbationFamily& fam);

/// Distinct positive two-gap sums at x over every x* and (u, y*).
std::vector<double> breakpoints_for_x(const PerturbationFamily& fam, std::size_t x);

/// {0}, b - 10 tol, b, b + 10 tol for each cluster representative b of the
/// given breakpoints (values within 100 tol merge, values below it count as
/// 0), and one value past the largest.
std::vector<double> grid_from_breakpoints(const std::vector<double>& breakpoints, double tol = kDefaultTol);

/// A decreasing eta schedule whose last value is below the distance from
/// eps + tol to the nearest breakpoint above it, so the eta-intersection
/// matches the closed form exactly.
std::vector<double> eta_schedule_below(const std::vector<double>& breakpoints, double eps, double tol = kDefaultTol);

/// The robust-duality verdict rule on two values.
bool values_agree(ExtReal p_star, ExtReal q, double tol = kDefaultTol) noexcept;

}  // namespace rdl
