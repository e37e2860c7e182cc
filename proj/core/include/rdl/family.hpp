#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdl/ext_real.hpp"
#include "rdl/paired_space.hpp"
#include "rdl/tabulated_function.hpp"

namespace rdl {

/// Input description of one scenario u: its parameter space (Y_u, Y_u*) and
/// the table F[x][y] of F_u on X x Y_u.
struct ScenarioSpec {
  std::string label;
  PairedSpace parameter;
  std::vector<std::vector<ExtReal>> F;
};

/// One scenario after construction, with its joint space and conjugate.
struct Scenario {
  std::string label;
  std::shared_ptr<const PairedSpace> parameter;
  std::shared_ptr<const PairedSpace> joint;  // X x Y_u
  TabulatedFunction F;                       // on joint primal
  TabulatedFunction F_conj;                  // on joint dual (X* x Y_u*)
};

/// A budget split eps1 + eps2 between scenario activity and the Fenchel gap.
struct EpsPair {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double budget() const noexcept { return eps1 + eps2; }
};

/// A dual-side pair (u, y_u*).
struct DualIndex {
  std::size_t scenario = 0;
  std::size_t y_star = 0;
  friend bool operator==(const DualIndex&, const DualIndex&) = default;
};

/// The family {F_u : u in U} over a common decision space (X, X*).
///
/// Construction tabulates everything the mappings need: F_u(x, 0_u), every
/// conjugate F_u*(x*, y_u*), the robust objective p = sup_u F_u(., 0_u), its
/// conjugate p*, and the optimistic dual value q = inf over (u, y_u*) of F_u*.
/// Instances are immutable afterwards.
class PerturbationFamily {
 public:
  PerturbationFamily(PairedSpace decision, std::vector<ScenarioSpec> scenarios);

  const PairedSpace& decision() const noexcept { return *decision_; }
  const std::shared_ptr<const PairedSpace>& decision_ptr() const noexcept { return decision_; }

  std::size_t scenario_count() const noexcept { return scenarios_.size(); }
  const Scenario& scenario(std::size_t k) const { return scenarios_.at(k); }
  /// Throws UnknownScenario.
  std::size_t scenario_index(std::string_view label) const;

  std::size_t nx() const noexcept { return decision_->primal_size(); }
  std::size_t nx_star() const noexcept { return decision_->dual_size(); }
  std::size_t ny_star(std::size_t k) const noexcept { return scenarios_[k].parameter->dual_size(); }

  /// F_u(x, 0_u).
  ExtReal at_zero(std::size_t k, std::size_t x) const noexcept { return f_zero_[k][x]; }
  /// F_u*(x*, y_u*).
  ExtReal conj(std::size_t k, std::size_t x_star, std::size_t y_star) const noexcept {
    const auto& s = scenarios_[k];
    return s.F_conj[x_star * s.parameter->dual_size() + y_star];
  }

  const TabulatedFunction& p() const noexcept { return p_; }
  const TabulatedFunction& p_conj() const noexcept { return p_conj_; }
  const TabulatedFunction& q() const noexcept { return q_; }

  /// Pairs (u, y_u*) attaining q(x*) within tol; empty when q(x*) = +inf.
  std::vector<DualIndex> q_argmin(std::size_t x_star, double tol = kDefaultTol) const;

  bool dom_p_nonempty() const noexcept { return dom_p_nonempty_; }

  /// The scenario specs the family was built from.
  std::vector<ScenarioSpec> specs() const;

 private:
  std::shared_ptr<const PairedSpace> decision_;
  std::vector<Scenario> scenarios_;
  std::vector<std::vector<ExtReal>> f_zero_;
  TabulatedFunction p_;
  TabulatedFunction p_conj_;
  TabulatedFunction q_;
  bool dom_p_nonempty_ = false;
};

/// p = sup_u F_u(., 0_u) on X.
TabulatedFunction robust_objective(const PerturbationFamily& fam);

/// q(x*) = inf over (u, y_u*) of F_u*(x*, y_u*) on X*.
TabulatedFunction dual_value_fn(const PerturbationFamily& fam);

}  // namespace rdl
