#include "rdl/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "rdl/conjugate.hpp"
#include "rdl/mappings.hpp"

namespace rdl {
namespace {

struct Props {
  bool robust = false;
  bool strong = false;
  bool reverse = false;
  bool both_neg_inf = false;
  std::optional<DualIndex> dual_witness;
  std::optional<std::size_t> primal_witness;
};

Props props_at(const PerturbationFamily& fam, std::size_t xs, double tol) {
  Props pr;
  const ExtReal ps = fam.p_conj()[xs];
  const ExtReal qv = fam.q()[xs];
  pr.robust = values_agree(ps, qv, tol);
  pr.both_neg_inf = ps.is_neg_inf() && qv.is_neg_inf();
  if (pr.robust && !pr.both_neg_inf) {
    if (qv.is_pos_inf()) {
      pr.strong = true;  // the dual maximum is vacuous when every F_u* is +inf
    } else {
      auto arg = fam.q_argmin(xs, tol);
      if (!arg.empty()) {
        pr.strong = true;
        pr.dual_witness = arg.front();
      }
    }
  }
  const Mask mp = detail::mp_mask(fam, xs, 0.0, tol);
  auto it = std::find(mp.begin(), mp.end(), 1);
  if (it != mp.end()) pr.primal_witness = static_cast<std::size_t>(it - mp.begin());
  pr.reverse = pr.robust && pr.primal_witness.has_value();
  return pr;
}

DualWitness witness_labels(const PerturbationFamily& fam, DualIndex d) {
  const Scenario& s = fam.scenario(d.scenario);
  return {s.label, s.parameter->label(Side::Dual, d.y_star)};
}

std::vector<double> with_zero(std::vector<double> grid) {
  grid.push_back(0.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double smallest_positive(const std::vector<double>& bps, double tol) {
  auto grid = grid_from_breakpoints(bps, tol);
  // grid = {0, b1 - 10tol, b1, ...}; b1 is the smallest cluster representative.
  return grid.size() >= 3 ? grid[2] : 1.0;
}

void add_positive(std::vector<double>& out, ExtReal v) {
  if (v.is_finite() && v.value() > 0.0) out.push_back(v.value());
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t x_index(const PerturbationFamily& fam, std::string_view x) { return fam.decision().index(Side::Primal, x); }
std::size_t xs_index(const PerturbationFamily& fam, std::string_view xs) { return fam.decision().index(Side::Dual, xs); }

void require_domain(const PerturbationFamily& fam) {
  if (!fam.dom_p_nonempty()) throw Error(ErrorCode::EmptyDomain, "dom p is empty");
}

void require_finite_p(const PerturbationFamily& fam, std::size_t x) {
  if (!fam.p()[x].is_finite()) {
    throw Error(ErrorCode::NonFinitePoint, "p is not finite at '" + fam.decision().label(Side::Primal, x) + "'");
  }
}

}  // namespace

bool values_agree(ExtReal p_star, ExtReal q, double tol) noexcept { return approx_equal(p_star, q, tol); }

std::vector<double> breakpoints_at(const PerturbationFamily& fam, std::size_t xs) {
  std::vector<double> out;
  const ExtReal ps = fam.p_conj()[xs];
  const ExtReal qv = fam.q()[xs];
  for (std::size_t x = 0; x < fam.nx(); ++x) {
    const ExtReal px = fam.p()[x];
    if (!px.is_finite()) continue;
    const double base = px.value() - fam.decision().pair(xs, x);
    if (ps.is_finite()) add_positive(out, ExtReal(base + ps.value()));
    if (qv.is_finite()) add_positive(out, ExtReal(base + qv.value()));
    for (std::size_t k = 0; k < fam.scenario_count(); ++k) {
      const ExtReal f0 = fam.at_zero(k, x);
      if (f0.is_finite()) add_positive(out, ExtReal(px.value() - f0.value()));
      for (std::size_t ys = 0; ys < fam.ny_star(k); ++ys) add_positive(out, detail::two_gap(fam, k, ys, xs, x));
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<double> breakpoints(const PerturbationFamily& fam) {
  std::vector<double> out;
  for (std::size_t x = 0; x < fam.nx(); ++x) {
    const ExtReal px = fam.p()[x];
    if (!px.is_finite()) continue;
    for (std::size_t xs = 0; xs < fam.nx_star(); ++xs) {
      const double base = px.value() - fam.decision().pair(xs, x);
      const ExtReal ps = fam.p_conj()[xs];
      const ExtReal qv = fam.q()[xs];
      if (ps.is_finite()) add_positive(out, ExtReal(base + ps.value()));
      if (qv.is_finite()) add_positive(out, ExtReal(base + qv.value()));
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<double> breakpoints_for_x(const PerturbationFamily& fam, std::size_t x) {
  std::vector<double> out;
  for (std::size_t xs = 0; xs < fam.nx_star(); ++xs)
    for (std::size_t k = 0; k < fam.scenario_count(); ++k)
      for (std::size_t ys = 0; ys < fam.ny_star(k); ++ys) add_positive(out, detail::two_gap(fam, k, ys, xs, x));
  return sorted_unique(std::move(out));
}

std::vector<double> grid_from_breakpoints(const std::vector<double>& bps, double tol) {
  const double merge = 100.0 * tol;
  const double margin = 10.0 * tol;
  std::vector<double> reps;
  for (double b : sorted_unique(bps)) {
    if (b <= merge) continue;
    if (reps.empty() || b - reps.back() > merge) reps.push_back(b);
  }
  std::vector<double> grid{0.0};
  for (double b : reps) {
    grid.push_back(b - margin);
    grid.push_back(b);
    grid.push_back(b + margin);
  }
  grid.push_back(reps.empty() ? 1.0 : reps.back() + 1.0);
  return grid;
}

std::vector<double> epsilon_grid_at(const PerturbationFamily& fam, std::size_t x_star, double tol) {
  return grid_from_breakpoints(breakpoints_at(fam, x_star), tol);
}

std::vector<double> epsilon_grid(const PerturbationFamily& fam, double tol) {
  return grid_from_breakpoints(breakpoints(fam), tol);
}

std::vector<double> eta_schedule_below(const std::vector<double>& bps, double eps, double tol) {
  double d = std::numeric_limits<double>::infinity();
  for (double b : bps)
    if (b > eps + tol) d = std::min(d, b - (eps + tol));
  std::vector<double> schedule{1.0, 0.1, 0.01};
  if (std::isfinite(d)) {
    const double last = d / 2.0;
    while (!schedule.empty() && schedule.back() <= last) schedule.pop_back();
    if (schedule.empty() || schedule.back() > last) schedule.push_back(last);
  }
  return schedule;
}

TheoremCheck check_theorem_robust(const PerturbationFamily& fam, std::string_view x_star,
                                  const std::vector<double>& eps_grid, double tol) {
  require_domain(fam);
  const std::size_t xs = xs_index(fam, x_star);
  TheoremCheck out;
  out.lhs = props_at(fam, xs, tol).robust;
  auto matches = [&](double eps) {
    return detail::mp_mask(fam, xs, eps, tol) == detail::a_script_mask(fam, xs, eps, tol);
  };
  out.rhs = true;
  for (double eps : with_zero(eps_grid)) {
    if (!matches(eps)) {
      out.rhs = false;
      break;
    }
  }
  out.rhs_local = matches(smallest_positive(breakpoints_at(fam, xs), tol) / 2.0);
  return out;
}

TheoremCheck check_theorem_strong(const PerturbationFamily& fam, std::string_view x_star,
                                  const std::vector<double>& eps_grid, double tol) {
  require_domain(fam);
  const std::size_t xs = xs_index(fam, x_star);
  const auto grid = with_zero(eps_grid);
  const double local_eps = smallest_positive(breakpoints_at(fam, xs), tol) / 2.0;
  TheoremCheck out;
  out.lhs = props_at(fam, xs, tol).strong;
  out.rhs_local = false;
  for (std::size_t k = 0; k < fam.scenario_count(); ++k) {
    for (std::size_t ys = 0; ys < fam.ny_star(k); ++ys) {
      auto matches = [&](double eps) {
        return detail::mp_mask(fam, xs, eps, tol) == detail::b_pair_mask(fam, k, ys, xs, eps, tol);
      };
      if (!*out.rhs_local && matches(local_eps)) out.rhs_local = true;
      if (!out.rhs && std::all_of(grid.begin(), grid.end(), matches)) {
        out.rhs = true;
        out.witness = witness_labels(fam, {k, ys});
      }
    }
  }
  return out;
}

TheoremCheck check_theorem_reverse(const PerturbationFamily& fam, std::string_view x_star, double tol) {
  const std::size_t xs = xs_index(fam, x_star);
  const Mask mp = detail::mp_mask(fam, xs, 0.0, tol);
  if (std::find(mp.begin(), mp.end(), 1) == mp.end()) {
    throw Error(ErrorCode::NoPrimalAttainment, "(Mp)(x*) is empty at '" + std::string(x_star) + "'");
  }
  TheoremCheck out;
  out.lhs = props_at(fam, xs, tol).reverse;
  out.rhs = mp == detail::a_script_mask(fam, xs, 0.0, tol);
  return out;
}

TheoremCheck check_theorem_minmax(const PerturbationFamily& fam, std::string_view x_star, double tol) {
  const std::size_t xs = xs_index(fam, x_star);
  const Mask mp = detail::mp_mask(fam, xs, 0.0, tol);
  if (std::find(mp.begin(), mp.end(), 1) == mp.end()) {
    throw Error(ErrorCode::NoPrimalAttainment, "(Mp)(x*) is empty at '" + std::string(x_star) + "'");
  }
  TheoremCheck out;
  const Props pr = props_at(fam, xs, tol);
  out.lhs = pr.strong && pr.reverse;
  for (std::size_t k = 0; k < fam.scenario_count() && !out.rhs; ++k)
    for (std::size_t ys = 0; ys < fam.ny_star(k) && !out.rhs; ++ys)
      if (mp == detail::b_pair_mask(fam, k, ys, xs, 0.0, tol)) {
        out.rhs = true;
        out.witness = witness_labels(fam, {k, ys});
      }
  return out;
}

StableChecks check_stable(const PerturbationFamily& fam, const std::vector<double>& eps_grid, double tol) {
  require_domain(fam);
  StableChecks out;
  out.stable_robust.lhs = out.stable_strong.lhs = true;
  for (std::size_t xs = 0; xs < fam.nx_star(); ++xs) {
    const Props pr = props_at(fam, xs, tol);
    out.stable_robust.lhs = out.stable_robust.lhs && pr.robust;
    out.stable_strong.lhs = out.stable_strong.lhs && pr.strong;
  }
  const auto grid = with_zero(eps_grid);
  out.stable_robust.rhs = out.stable_strong.rhs = true;
  for (std::size_t x = 0; x < fam.nx(); ++x) {
    for (double eps : grid) {
      const Mask sub = detail::subdiff_p_mask(fam, x, eps, tol);
      if (out.stable_robust.rhs && sub != detail::c_mask(fam, x, eps, tol)) out.stable_robust.rhs = false;
      if (out.stable_strong.rhs && sub != detail::d_mask(fam, x, eps, tol)) out.stable_strong.rhs = false;
    }
  }
  // The "for all small eps" forms compare at half the smallest positive breakpoint.
  const double local_eps = smallest_positive(breakpoints(fam), tol) / 2.0;
  out.stable_robust.rhs_local = out.stable_strong.rhs_local = true;
  for (std::size_t x = 0; x < fam.nx(); ++x) {
    const Mask sub = detail::subdiff_p_mask(fam, x, local_eps, tol);
    if (sub != detail::c_mask(fam, x, local_eps, tol)) out.stable_robust.rhs_local = false;
    if (sub != detail::d_mask(fam, x, local_eps, tol)) out.stable_strong.rhs_local = false;
  }
  return out;
}

TripleCheck check_subdiff_formula(const PerturbationFamily& fam, std::string_view x, double tol) {
  const std::size_t ix = x_index(fam, x);
  require_finite_p(fam, ix);
  const Mask sub = detail::subdiff_p_mask(fam, ix, 0.0, tol);
  TripleCheck out;
  out.i = sub == detail::c_mask(fam, ix, 0.0, tol);
  out.ii = out.iii = true;
  for (std::size_t xs = 0; xs < sub.size(); ++xs) {
    if (!sub[xs]) continue;
    const Props pr = props_at(fam, xs, tol);
    out.ii = out.ii && pr.reverse;
    out.iii = out.iii && pr.robust;
  }
  return out;
}

TripleCheck check_brsc(const PerturbationFamily& fam, std::string_view x, double tol) {
  const std::size_t ix = x_index(fam, x);
  require_finite_p(fam, ix);
  const Mask sub = detail::subdiff_p_mask(fam, ix, 0.0, tol);
  TripleCheck out;
  out.i = sub == detail::d_mask(fam, ix, 0.0, tol);
  out.ii = out.iii = true;
  for (std::size_t xs = 0; xs < sub.size(); ++xs) {
    if (!sub[xs]) continue;
    const Props pr = props_at(fam, xs, tol);
    out.ii = out.ii && pr.strong && pr.reverse;
    out.iii = out.iii && pr.strong;
  }
  return out;
}

DualityVerdict diagnose_point(const PerturbationFamily& fam, std::string_view x_star, const DiagnoseOptions& opts) {
  const std::size_t xs = xs_index(fam, x_star);
  const double tol = opts.tol;
  const Props pr = props_at(fam, xs, tol);
  DualityVerdict v;
  v.x_star = std::string(x_star);
  v.p_star = fam.p_conj()[xs];
  v.q_val = fam.q()[xs];
  v.robust = pr.robust;
  v.strong = pr.strong;
  v.reverse_strong = pr.reverse;
  v.minmax = pr.strong && pr.reverse;
  v.both_neg_inf = pr.both_neg_inf;
  if (pr.strong && pr.dual_witness) v.dual_witness = witness_labels(fam, *pr.dual_witness);
  if (pr.reverse) v.primal_witness = fam.decision().label(Side::Primal, *pr.primal_witness);

  if (!opts.theorem_checks) return v;
  require_domain(fam);
  std::vector<double> grid = epsilon_grid_at(fam, xs, tol);
  grid.insert(grid.end(), opts.extra_eps.begin(), opts.extra_eps.end());
  v.checks.emplace(kCheckRobust, check_theorem_robust(fam, x_star, grid, tol));
  v.checks.emplace(kCheckStrong, check_theorem_strong(fam, x_star, grid, tol));
  if (pr.primal_witness) {
    v.checks.emplace(kCheckReverse, check_theorem_reverse(fam, x_star, tol));
    v.checks.emplace(kCheckMinmax, check_theorem_minmax(fam, x_star, tol));
  }
  for (const auto& [id, check] : v.checks) {
    if (!check.agrees()) {
      throw Error(ErrorCode::InternalInconsistency, id + " disagrees at x* = '" + v.x_star + "'");
    }
  }
  return v;
}

DualityReport diagnose(const PerturbationFamily& fam, const DiagnoseOptions& opts) {
  DualityReport rep;
  rep.tol = opts.tol;
  DiagnoseOptions point_opts = opts;
  if (!fam.dom_p_nonempty()) {
    point_opts.theorem_checks = false;
    rep.notes.push_back("dom p is empty: characterization checks skipped");
  }
  for (std::size_t xs = 0; xs < fam.nx_star(); ++xs) {
    rep.verdicts.push_back(diagnose_point(fam, fam.decision().label(Side::Dual, xs), point_opts));
    if (rep.verdicts.back().both_neg_inf) {
      rep.notes.push_back("p* = q = -inf at x* = '" + rep.verdicts.back().x_star +
                          "': counted as robust duality, not as strong duality");
    }
  }
  if (!point_opts.theorem_checks) return rep;

  std::vector<double> grid = epsilon_grid(fam, opts.tol);
  grid.insert(grid.end(), opts.extra_eps.begin(), opts.extra_eps.end());
  StableChecks st = check_stable(fam, grid, opts.tol);
  rep.stable_robust = st.stable_robust;
  rep.stable_strong = st.stable_strong;
  if (!st.stable_robust.agrees() || !st.stable_strong.agrees()) {
    throw Error(ErrorCode::InternalInconsistency, "stable duality check disagrees with its subdifferential formula");
  }
  for (std::size_t x = 0; x < fam.nx(); ++x) {
    if (!fam.p()[x].is_finite()) continue;
    const std::string& label = fam.decision().label(Side::Primal, x);
    PointChecks pc{label, check_subdiff_formula(fam, label, opts.tol), check_brsc(fam, label, opts.tol)};
    if (!pc.subdifferential_formula.agrees() || !pc.brsc.agrees()) {
      throw Error(ErrorCode::InternalInconsistency, "subdifferential checks disagree at x = '" + label + "'");
    }
    rep.point_checks.push_back(std::move(pc));
  }
  return rep;
}

}  // namespace rdl
