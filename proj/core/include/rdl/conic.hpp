#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdl/family.hpp"

namespace rdl {

/// Scenario u of a conic constraint H_u(x) <= 0 (componentwise, the
/// nonnegative-orthant ordering) with its multiplier grid in R^m_+.
struct ConicScenario {
  std::string u;
  std::vector<std::vector<double>> H;           // H[x] in R^m
  std::vector<std::vector<double>> dual_grid;   // multipliers y* >= 0, containing 0
  std::vector<std::vector<double>> shifts;      // Y_u grid; empty selects the default
};

/// minimize f(x) subject to H_u(x) <= 0 for every u, on a finite decision grid.
struct ConicUncertainInstance {
  PairedSpace decision;
  std::vector<ExtReal> f;
  std::vector<ConicScenario> scenarios;

  /// Throws DimensionMismatch, NotInDualCone (negative multiplier),
  /// ValidationError (no zero multiplier) or MissingZeroShift.
  void validate() const;
  std::size_t dimension(std::size_t k) const { return scenarios.at(k).H.at(0).size(); }
};

/// The shift grid used for scenario k: the supplied one, or 0 together with
/// every -H_u(x).
std::vector<std::vector<double>> shift_grid(const ConicUncertainInstance& inst, std::size_t k);

/// F_u(x, y) = f(x) if H_u(x) + y <= 0, else +inf, tabulated on X x Y_u.
PerturbationFamily build_family(const ConicUncertainInstance& inst);

/// sup_x <x*, x> - f(x) - <y*, H_u(x)> for y* >= 0, and +inf for any other y*.
ExtReal conic_conjugate(const ConicUncertainInstance& inst, std::string_view u, std::string_view x_star,
                        const std::vector<double>& y_star);

struct ConicWitness {
  std::string u;
  std::vector<double> y_star;
};

struct FarkasOutcome {
  bool i = false;   ///< f(x) >= r on the robust feasible set
  bool ii = false;  ///< some (u, y*) on the grid has f + <y*, H_u> >= r everywhere
  std::optional<ConicWitness> witness;
  /// i holds but no multiplier on the supplied grid certifies it.
  bool no_certificate_on_grid() const noexcept { return i && !ii; }
};

FarkasOutcome uncertain_farkas(const ConicUncertainInstance& inst, double r, double tol = kDefaultTol);

struct OptimalityOutcome {
  bool optimal_on_grid = false;
  std::optional<ConicWitness> certificate;
};

/// Runs uncertain_farkas at r = f(x_bar). Throws InfeasiblePoint unless x_bar
/// satisfies every constraint, NonFinitePoint if f(x_bar) is +inf.
OptimalityOutcome optimality_test(const ConicUncertainInstance& inst, std::string_view x_bar,
                                  double tol = kDefaultTol);

/// H_u(x) <= 0 for every u.
bool robust_feasible(const ConicUncertainInstance& inst, std::size_t x);

}  // namespace rdl
