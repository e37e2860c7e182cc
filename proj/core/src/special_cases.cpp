#include "rdl/special_cases.hpp"

#include <algorithm>

#include "rdl/conjugate.hpp"
#include "rdl/mappings.hpp"

namespace rdl {
namespace {

void require_single(const PerturbationFamily& fam) {
  if (!is_single_scenario(fam)) throw Error(ErrorCode::ValidationError, "family has more than one scenario");
}

void require_constant(const PerturbationFamily& fam) {
  if (!is_constant_in_y(fam)) throw Error(ErrorCode::ValidationError, "family is not constant in y");
}

const std::vector<std::string>& x_labels(const PerturbationFamily& fam) {
  return fam.decision().labels(Side::Primal);
}

// Mask over X of the points (x, 0_u) in an eps-argmin over X x Y_u.
Mask zero_slice(const PerturbationFamily& fam, std::size_t k, const Mask& joint) {
  const Scenario& s = fam.scenario(k);
  const std::size_t ny = s.parameter->primal_size();
  const std::size_t y0 = s.parameter->zero(Side::Primal);
  Mask out(fam.nx(), 0);
  for (std::size_t x = 0; x < fam.nx(); ++x) out[x] = joint[x * ny + y0];
  return out;
}

Mask single_b_mask(const PerturbationFamily& fam, std::size_t ys, std::size_t xs, double eps, double tol) {
  const Scenario& s = fam.scenario(0);
  const std::size_t joint_dual = xs * s.parameter->dual_size() + ys;
  return zero_slice(fam, 0, detail::argmin_mask(detail::tilted(s.F, joint_dual), eps, tol));
}

// Least eps1 putting x in J^eps1(u), or nullopt when x is outside dom p or dom f_u.
std::optional<double> least_activity(const PerturbationFamily& fam, std::size_t k, std::size_t x) {
  const ExtReal px = fam.p()[x];
  const ExtReal f0 = fam.at_zero(k, x);
  if (!px.is_finite() || !f0.is_finite()) return std::nullopt;
  return std::max(0.0, px.value() - f0.value());
}

Mask constant_b_mask(const PerturbationFamily& fam, std::size_t k, std::size_t xs, double eps, double tol) {
  const TabulatedFunction fu = scenario_objective(fam, k);
  const std::vector<ExtReal> tilt = detail::tilted(fu, xs);
  Mask out(fam.nx(), 0);
  for (std::size_t x = 0; x < fam.nx(); ++x) {
    auto eps1 = least_activity(fam, k, x);
    if (!eps1 || *eps1 > eps + tol) continue;
    out[x] = detail::argmin_mask(tilt, std::max(0.0, eps - *eps1), tol)[x];
  }
  return out;
}

}  // namespace

bool is_single_scenario(const PerturbationFamily& fam) noexcept { return fam.scenario_count() == 1; }

bool is_constant_in_y(const PerturbationFamily& fam) noexcept {
  for (std::size_t k = 0; k < fam.scenario_count(); ++k) {
    const Scenario& s = fam.scenario(k);
    const std::size_t ny = s.parameter->primal_size();
    for (std::size_t x = 0; x < fam.nx(); ++x)
      for (std::size_t y = 0; y < ny; ++y)
        if (s.F[x * ny + y] != fam.at_zero(k, x)) return false;
  }
  return true;
}

TabulatedFunction scenario_objective(const PerturbationFamily& fam, std::size_t k) {
  std::vector<ExtReal> vals(fam.nx());
  for (std::size_t x = 0; x < fam.nx(); ++x) vals[x] = fam.at_zero(k, x);
  return TabulatedFunction(fam.decision_ptr(), Side::Primal, std::move(vals));
}

bool perturbational_duality_holds(const PerturbationFamily& fam, std::string_view x_star, double tol) {
  require_single(fam);
  const std::size_t xs = fam.decision().index(Side::Dual, x_star);
  const TabulatedFunction f = scenario_objective(fam, 0);
  const ExtReal primal = finite_inf(detail::tilted(f, xs));
  const Scenario& s = fam.scenario(0);
  std::vector<ExtReal> neg_conj;
  for (std::size_t ys = 0; ys < s.parameter->dual_size(); ++ys) neg_conj.push_back(-fam.conj(0, xs, ys));
  return approx_equal(primal, finite_sup(neg_conj), tol);
}

bool inf_sup_duality_holds(const PerturbationFamily& fam, std::string_view x_star, double tol) {
  require_constant(fam);
  const std::size_t xs = fam.decision().index(Side::Dual, x_star);
  std::vector<ExtReal> fu_conj;
  std::vector<ExtReal> sup_vals(fam.nx(), ExtReal::neg_inf());
  for (std::size_t k = 0; k < fam.scenario_count(); ++k) {
    const TabulatedFunction fu = scenario_objective(fam, k);
    fu_conj.push_back(conjugate(fu)[xs]);
    for (std::size_t x = 0; x < fam.nx(); ++x) sup_vals[x] = std::max(sup_vals[x], fu[x], std::less<>());
  }
  const TabulatedFunction sup_f(fam.decision_ptr(), Side::Primal, std::move(sup_vals));
  return approx_equal(conjugate(sup_f)[xs], finite_inf(fu_conj), tol);
}

PointSet single_a_script(const PerturbationFamily& fam, std::string_view x_star, double eps, double tol) {
  require_single(fam);
  require_nonnegative(eps);
  const std::size_t xs = fam.decision().index(Side::Dual, x_star);
  Mask out(fam.nx(), 0);
  for (std::size_t ys = 0; ys < fam.ny_star(0); ++ys) {
    const Mask m = single_b_mask(fam, ys, xs, eps, tol);
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = out[x] || m[x];
  }
  return PointSet::from_mask(x_labels(fam), out);
}

PointSet single_b(const PerturbationFamily& fam, std::string_view y_star, std::string_view x_star, double eps,
                  double tol) {
  require_single(fam);
  const std::size_t xs = fam.decision().index(Side::Dual, x_star);
  const std::size_t ys = fam.scenario(0).parameter->index(Side::Dual, y_star);
  return PointSet::from_mask(x_labels(fam), single_b_mask(fam, ys, xs, eps, tol));
}

PointSet single_d(const PerturbationFamily& fam, std::string_view x, double eps, double tol) {
  require_single(fam);
  const std::size_t ix = fam.decision().index(Side::Primal, x);
  const Scenario& s = fam.scenario(0);
  const std::size_t nys = s.parameter->dual_size();
  const std::size_t joint = ix * s.parameter->primal_size() + s.parameter->zero(Side::Primal);
  const Mask sub = detail::subdifferential_mask(s.F, s.F_conj, joint, eps, tol);
  Mask out(fam.nx_star(), 0);
  for (std::size_t j = 0; j < sub.size(); ++j)
    if (sub[j]) out[j / nys] = 1;
  return PointSet::from_mask(fam.decision().labels(Side::Dual), out);
}

PointSet constant_a_script(const PerturbationFamily& fam, std::string_view x_star, double eps, double tol) {
  require_constant(fam);
  require_nonnegative(eps);
  const std::size_t xs = fam.decision().index(Side::Dual, x_star);
  Mask out(fam.nx(), 0);
  for (std::size_t k = 0; k < fam.scenario_count(); ++k) {
    const Mask m = constant_b_mask(fam, k, xs, eps, tol);
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = out[x] || m[x];
  }
  return PointSet::from_mask(x_labels(fam), out);
}

PointSet constant_b(const PerturbationFamily& fam, std::string_view u, std::string_view x_star, double eps,
                    double tol) {
  require_constant(fam);
  require_nonnegative(eps);
  const std::size_t xs = fam.decision().index(Side::Dual, x_star);
  return PointSet::from_mask(x_labels(fam), constant_b_mask(fam, fam.scenario_index(u), xs, eps, tol));
}

PointSet constant_d(const PerturbationFamily& fam, std::string_view x, double eps, double tol) {
  require_constant(fam);
  require_nonnegative(eps);
  const std::size_t ix = fam.decision().index(Side::Primal, x);
  Mask out(fam.nx_star(), 0);
  for (std::size_t k = 0; k < fam.scenario_count(); ++k) {
    auto eps1 = least_activity(fam, k, ix);
    if (!eps1 || *eps1 > eps + tol) continue;
    const TabulatedFunction fu = scenario_objective(fam, k);
    const Mask sub = detail::subdifferential_mask(fu, conjugate(fu), ix, std::max(0.0, eps - *eps1), tol);
    for (std::size_t xs = 0; xs < out.size(); ++xs) out[xs] = out[xs] || sub[xs];
  }
  return PointSet::from_mask(fam.decision().labels(Side::Dual), out);
}

}  // namespace rdl
