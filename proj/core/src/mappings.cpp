#include "rdl/mappings.hpp"

#include <algorithm>

#include "rdl/conjugate.hpp"

namespace rdl {
namespace detail {
namespace {

bool finite_p(const PerturbationFamily& fam, std::size_t x) { return fam.p()[x].is_finite(); }

double pair(const PerturbationFamily& fam, std::size_t x_star, std::size_t x) {
  return fam.decision().pair(x_star, x);
}

// F_u - <(x*, y*), .> on X x Y_u, with its infimum.
struct Tilted {
  std::vector<ExtReal> values;
  ExtReal inf;
};

Tilted tilt(const PerturbationFamily& fam, std::size_t k, std::size_t y_star, std::size_t x_star) {
  const Scenario& s = fam.scenario(k);
  Tilted t{tilted(s.F, x_star * s.parameter->dual_size() + y_star), ExtReal()};
  t.inf = finite_inf(t.values);
  return t;
}

// Membership in eps-argmin of the tilted table, same rule as argmin_mask.
bool in_argmin(const Tilted& t, std::size_t i, double eps, double tol) {
  return t.inf.is_finite() && t.values[i].is_finite() && t.values[i].value() <= t.inf.value() + eps + tol;
}

bool in_j(const PerturbationFamily& fam, std::size_t k, std::size_t x, double eps, double tol) {
  if (!finite_p(fam, x)) return false;
  const ExtReal f0 = fam.at_zero(k, x);
  return f0.is_finite() && fam.p()[x].value() <= f0.value() + eps + tol;
}

Mask intersect(Mask a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
  return a;
}

}  // namespace

void validate_schedule(const std::vector<double>& eta_schedule) {
  if (eta_schedule.empty()) throw Error(ErrorCode::ValidationError, "eta schedule is empty");
  for (std::size_t i = 0; i < eta_schedule.size(); ++i) {
    if (!(eta_schedule[i] > 0.0)) throw Error(ErrorCode::ValidationError, "eta values must be positive");
    if (i && !(eta_schedule[i] < eta_schedule[i - 1])) {
      throw Error(ErrorCode::ValidationError, "eta schedule must be strictly decreasing");
    }
  }
}

ExtReal two_gap(const PerturbationFamily& fam, std::size_t k, std::size_t y_star, std::size_t x_star,
                std::size_t x) {
  const ExtReal px = fam.p()[x];
  const ExtReal f0 = fam.at_zero(k, x);
  const ExtReal fc = fam.conj(k, x_star, y_star);
  if (!px.is_finite() || !f0.is_finite() || !fc.is_finite()) return ExtReal::pos_inf();
  const double g1 = std::max(0.0, px.value() - f0.value());
  const double g2 = fc.value() + f0.value() - pair(fam, x_star, x);
  return ExtReal(g1 + g2);
}

Mask s_mask(const PerturbationFamily& fam, std::size_t x_star, double eps, double tol) {
  require_nonnegative(eps);
  const ExtReal qv = fam.q()[x_star];
  Mask m(fam.nx(), 0);
  if (qv.is_pos_inf()) return m;
  for (std::size_t x = 0; x < fam.nx(); ++x) {
    if (!finite_p(fam, x)) continue;
    m[x] = qv.is_neg_inf() ||
           fam.p()[x].value() - pair(fam, x_star, x) <= -qv.value() + eps + tol;
  }
  return m;
}

Mask j_mask(const PerturbationFamily& fam, std::size_t k, double eps, double tol) {
  require_nonnegative(eps);
  Mask m(fam.nx(), 0);
  for (std::size_t x = 0; x < fam.nx(); ++x) m[x] = in_j(fam, k, x, eps, tol);
  return m;
}

Mask i_mask(const PerturbationFamily& fam, std::size_t x, double eps, double tol) {
  require_nonnegative(eps);
  Mask m(fam.scenario_count(), 0);
  if (!finite_p(fam, x)) return m;
  for (std::size_t k = 0; k < fam.scenario_count(); ++k) {
    const ExtReal f0 = fam.at_zero(k, x);
    m[k] = f0.is_finite() && f0.value() >= fam.p()[x].value() - eps - tol;
  }
  return m;
}

Mask a_pair_mask(const PerturbationFamily& fam, std::size_t k, std::size_t y_star, std::size_t x_star,
                 EpsPair split, double tol) {
  require_nonnegative(split.eps1);
  require_nonnegative(split.eps2);
  const Scenario& s = fam.scenario(k);
  const std::size_t ny = s.parameter->primal_size();
  const std::size_t y0 = s.parameter->zero(Side::Primal);
  const Mask m_set = argmin_mask(tilted(s.F, x_star * s.parameter->dual_size() + y_star), split.eps2, tol);
  Mask out(fam.nx(), 0);
  for (std::size_t x = 0; x < fam.nx(); ++x) out[x] = in_j(fam, k, x, split.eps1, tol) && m_set[x * ny + y0];
  return out;
}

Mask a_script_mask(const PerturbationFamily& fam, std::size_t x_star, double eps, double tol) {
  require_nonnegative(eps);
  Mask out(fam.nx(), 0);
  for (std::size_t x = 0; x < fam.nx(); ++x) {
    ExtReal least = ExtReal::pos_inf();
    for (std::size_t k = 0; k < fam.scenario_count(); ++k)
      for (std::size_t ys = 0; ys < fam.ny_star(k); ++ys) least = std::min(least, two_gap(fam, k, ys, x_star, x), std::less<>());
    out[x] = least.is_finite() && least.value() <= eps + tol;
  }
  return out;
}

Mask a_script_oracle_mask(const PerturbationFamily& fam, std::size_t x_star, double eps,
                          const std::vector<double>& eta_schedule, double tol) {
  require_nonnegative(eps);
  validate_schedule(eta_schedule);
  std::vector<std::pair<std::size_t, Tilted>> tilts;
  for (std::size_t k = 0; k < fam.scenario_count(); ++k)
    for (std::size_t ys = 0; ys < fam.ny_star(k); ++ys) tilts.emplace_back(k, tilt(fam, k, ys, x_star));

  Mask out(fam.nx(), 1);
  for (double eta : eta_schedule) {
    const double budget = eps + eta;
    Mask level(fam.nx(), 0);
    for (const auto& [k, t] : tilts) {
      const Scenario& s = fam.scenario(k);
      const std::size_t ny = s.parameter->primal_size();
      const std::size_t y0 = s.parameter->zero(Side::Primal);
      for (std::size_t x = 0; x < fam.nx(); ++x) {
        if (level[x] || !finite_p(fam, x) || !fam.at_zero(k, x).is_finite()) continue;
        // The split spending the least on activity leaves the most for eps2.
        const double eps1 = std::max(0.0, fam.p()[x].value() - fam.at_zero(k, x).value());
        if (eps1 > budget + tol) continue;
        const double eps2 = std::max(0.0, budget - eps1);
        level[x] = in_j(fam, k, x, eps1, tol) && in_argmin(t, x * ny + y0, eps2, tol);
      }
    }
    out = intersect(std::move(out), level);
  }
  return out;
}

Mask b_pair_mask(const PerturbationFamily& fam, std::size_t k, std::size_t y_star, std::size_t x_star,
                 double eps, double tol) {
  require_nonnegative(eps);
  Mask out(fam.nx(), 0);
  for (std::size_t x = 0; x < fam.nx(); ++x) {
    const ExtReal g = two_gap(fam, k, y_star, x_star, x);
    out[x] = g.is_finite() && g.value() <= eps + tol;
  }
  return out;
}

Mask b_union_mask(const PerturbationFamily& fam, std::size_t x_star, double eps, double tol) {
  Mask out(fam.nx(), 0);
  for (std::size_t k = 0; k < fam.scenario_count(); ++k)
    for (std::size_t ys = 0; ys < fam.ny_star(k); ++ys) {
      const Mask b = b_pair_mask(fam, k, ys, x_star, eps, tol);
      for (std::size_t x = 0; x < out.size(); ++x) out[x] = out[x] || b[x];
    }
  return out;
}

Mask d_mask(const PerturbationFamily& fam, std::size_t x, double eps, double tol) {
  require_nonnegative(eps);
  Mask out(fam.nx_star(), 0);
  if (!finite_p(fam, x)) return out;
  for (std::size_t xs = 0; xs < fam.nx_star(); ++xs) {
    for (std::size_t k = 0; k < fam.scenario_count() && !out[xs]; ++k)
      for (std::size_t ys = 0; ys < fam.ny_star(k) && !out[xs]; ++ys) {
        const ExtReal g = two_gap(fam, k, ys, xs, x);
        out[xs] = g.is_finite() && g.value() <= eps + tol;
      }
  }
  return out;
}

Mask c_mask(const PerturbationFamily& fam, std::size_t x, double eps, double tol) {
  require_nonnegative(eps);
  Mask out(fam.nx_star(), 0);
  if (!finite_p(fam, x)) return out;
  for (std::size_t xs = 0; xs < fam.nx_star(); ++xs) {
    ExtReal least = ExtReal::pos_inf();
    for (std::size_t k = 0; k < fam.scenario_count(); ++k)
      for (std::size_t ys = 0; ys < fam.ny_star(k); ++ys) least = std::min(least, two_gap(fam, k, ys, xs, x), std::less<>());
    out[xs] = least.is_finite() && least.value() <= eps + tol;
  }
  return out;
}

Mask c_oracle_mask(const PerturbationFamily& fam, std::size_t x, double eps,
                   const std::vector<double>& eta_schedule, double tol) {
  require_nonnegative(eps);
  validate_schedule(eta_schedule);
  Mask out(fam.nx_star(), 1);
  for (double eta : eta_schedule) out = intersect(std::move(out), d_mask(fam, x, eps + eta, tol));
  return out;
}

Mask mp_mask(const PerturbationFamily& fam, std::size_t x_star, double eps, double tol) {
  return argmin_mask(tilted(fam.p(), x_star), eps, tol);
}

Mask subdiff_p_mask(const PerturbationFamily& fam, std::size_t x, double eps, double tol) {
  return subdifferential_mask(fam.p(), fam.p_conj(), x, eps, tol);
}

}  // namespace detail

namespace {

const std::vector<std::string>& xs_labels(const PerturbationFamily& fam) { return fam.decision().labels(Side::Primal); }
const std::vector<std::string>& xstar_labels(const PerturbationFamily& fam) { return fam.decision().labels(Side::Dual); }
std::size_t x_index(const PerturbationFamily& fam, std::string_view x) { return fam.decision().index(Side::Primal, x); }
std::size_t xstar_index(const PerturbationFamily& fam, std::string_view xs) { return fam.decision().index(Side::Dual, xs); }
std::size_t ystar_index(const PerturbationFamily& fam, std::size_t k, std::string_view ys) {
  return fam.scenario(k).parameter->index(Side::Dual, ys);
}

std::vector<std::string> scenario_labels(const PerturbationFamily& fam) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < fam.scenario_count(); ++k) out.push_back(fam.scenario(k).label);
  return out;
}

}  // namespace

PointSet s_eps(const PerturbationFamily& fam, std::string_view x_star, double eps, double tol) {
  return PointSet::from_mask(xs_labels(fam), detail::s_mask(fam, xstar_index(fam, x_star), eps, tol));
}

PointSet j_eps(const PerturbationFamily& fam, std::string_view u, double eps, double tol) {
  return PointSet::from_mask(xs_labels(fam), detail::j_mask(fam, fam.scenario_index(u), eps, tol));
}

PointSet i_eps(const PerturbationFamily& fam, std::string_view x, double eps, double tol) {
  return PointSet::from_mask(scenario_labels(fam), detail::i_mask(fam, x_index(fam, x), eps, tol));
}

PointSet a_pair(const PerturbationFamily& fam, std::string_view u, std::string_view y_star,
                std::string_view x_star, EpsPair split, double tol) {
  const std::size_t k = fam.scenario_index(u);
  return PointSet::from_mask(
      xs_labels(fam), detail::a_pair_mask(fam, k, ystar_index(fam, k, y_star), xstar_index(fam, x_star), split, tol));
}

PointSet a_script(const PerturbationFamily& fam, std::string_view x_star, double eps, double tol) {
  return PointSet::from_mask(xs_labels(fam), detail::a_script_mask(fam, xstar_index(fam, x_star), eps, tol));
}

PointSet a_script_oracle(const PerturbationFamily& fam, std::string_view x_star, double eps,
                         const std::vector<double>& eta_schedule, double tol) {
  return PointSet::from_mask(xs_labels(fam),
                             detail::a_script_oracle_mask(fam, xstar_index(fam, x_star), eps, eta_schedule, tol));
}

PointSet b_pair(const PerturbationFamily& fam, std::string_view u, std::string_view y_star,
                std::string_view x_star, double eps, double tol) {
  const std::size_t k = fam.scenario_index(u);
  return PointSet::from_mask(
      xs_labels(fam), detail::b_pair_mask(fam, k, ystar_index(fam, k, y_star), xstar_index(fam, x_star), eps, tol));
}

PointSet b_union(const PerturbationFamily& fam, std::string_view x_star, double eps, double tol) {
  return PointSet::from_mask(xs_labels(fam), detail::b_union_mask(fam, xstar_index(fam, x_star), eps, tol));
}

PointSet d_eps(const PerturbationFamily& fam, std::string_view x, double eps, double tol) {
  return PointSet::from_mask(xstar_labels(fam), detail::d_mask(fam, x_index(fam, x), eps, tol));
}

PointSet c_eps(const PerturbationFamily& fam, std::string_view x, double eps, double tol) {
  return PointSet::from_mask(xstar_labels(fam), detail::c_mask(fam, x_index(fam, x), eps, tol));
}

PointSet c_eps_oracle(const PerturbationFamily& fam, std::string_view x, double eps,
                      const std::vector<double>& eta_schedule, double tol) {
  return PointSet::from_mask(xstar_labels(fam),
                             detail::c_oracle_mask(fam, x_index(fam, x), eps, eta_schedule, tol));
}

ExactMaps exact_maps(const PerturbationFamily& fam, std::string_view x, double tol) {
  const std::size_t ix = x_index(fam, x);
  ExactMaps out;
  out.D = PointSet::from_mask(xstar_labels(fam), detail::d_mask(fam, ix, 0.0, tol));
  out.C = PointSet::from_mask(xstar_labels(fam), detail::c_mask(fam, ix, 0.0, tol));
  out.I = PointSet::from_mask(scenario_labels(fam), detail::i_mask(fam, ix, 0.0, tol));
  for (std::size_t xs = 0; xs < fam.nx_star(); ++xs) {
    out.Mp.emplace(xstar_labels(fam)[xs], PointSet::from_mask(xs_labels(fam), detail::mp_mask(fam, xs, 0.0, tol)));
  }
  return out;
}

}  // namespace rdl
