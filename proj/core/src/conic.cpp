#include "rdl/conic.hpp"

#include <algorithm>

namespace rdl {
namespace {

bool is_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double a) { return a == 0.0; });
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool nonpositive_after_shift(const std::vector<double>& h, const std::vector<double>& y) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] + y[i] > 0.0) return false;
  return true;
}

std::vector<double> negated(std::vector<double> v) {
  for (double& a : v) a = a == 0.0 ? 0.0 : -a;
  return v;
}

}  // namespace

void ConicUncertainInstance::validate() const {
  const std::size_t nx = decision.primal_size();
  if (f.size() != nx) throw Error(ErrorCode::DimensionMismatch, "f needs one value per point");
  for (ExtReal v : f)
    if (v.is_neg_inf()) throw Error(ErrorCode::ValidationError, "f may not take -inf");
  if (scenarios.empty()) throw Error(ErrorCode::ValidationError, "conic instance has no scenarios");
  for (const auto& s : scenarios) {
    if (s.H.size() != nx) throw Error(ErrorCode::DimensionMismatch, "scenario '" + s.u + "' needs H at every point");
    const std::size_t m = s.H.front().size();
    if (m == 0) throw Error(ErrorCode::DimensionMismatch, "scenario '" + s.u + "' has an empty constraint vector");
    for (const auto& h : s.H)
      if (h.size() != m) throw Error(ErrorCode::DimensionMismatch, "scenario '" + s.u + "' mixes H dimensions");
    bool has_zero = false;
    for (const auto& y : s.dual_grid) {
      if (y.size() != m) throw Error(ErrorCode::DimensionMismatch, "dual grid vector of wrong length in '" + s.u + "'");
      for (double v : y)
        if (!(v >= 0.0)) throw Error(ErrorCode::NotInDualCone, "dual grid of '" + s.u + "' leaves the nonnegative orthant");
      has_zero = has_zero || is_zero(y);
    }
    if (!has_zero) throw Error(ErrorCode::ValidationError, "dual grid of '" + s.u + "' lacks the zero multiplier");
    if (!s.shifts.empty()) {
      bool zero_shift = false;
      for (const auto& y : s.shifts) {
        if (y.size() != m) throw Error(ErrorCode::DimensionMismatch, "shift vector of wrong length in '" + s.u + "'");
        zero_shift = zero_shift || is_zero(y);
      }
      if (!zero_shift) throw Error(ErrorCode::MissingZeroShift, "shift grid of '" + s.u + "' lacks 0");
    }
  }
}

std::vector<std::vector<double>> shift_grid(const ConicUncertainInstance& inst, std::size_t k) {
  const ConicScenario& s = inst.scenarios.at(k);
  if (!s.shifts.empty()) return s.shifts;
  std::vector<std::vector<double>> out{std::vector<double>(s.H.front().size(), 0.0)};
  for (const auto& h : s.H) {
    auto y = negated(h);
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(std::move(y));
  }
  return out;
}

PerturbationFamily build_family(const ConicUncertainInstance& inst) {
  inst.validate();
  std::vector<ScenarioSpec> specs;
  for (std::size_t k = 0; k < inst.scenarios.size(); ++k) {
    const ConicScenario& s = inst.scenarios[k];
    auto shifts = shift_grid(inst, k);
    PairedSpace param = PairedSpace::from_coordinates(shifts, s.dual_grid);
    std::vector<std::vector<ExtReal>> F(inst.f.size(), std::vector<ExtReal>(shifts.size()));
    for (std::size_t x = 0; x < inst.f.size(); ++x)
      for (std::size_t y = 0; y < shifts.size(); ++y)
        F[x][y] = nonpositive_after_shift(s.H[x], shifts[y]) ? inst.f[x] : ExtReal::pos_inf();
    specs.push_back(ScenarioSpec{s.u, std::move(param), std::move(F)});
  }
  return PerturbationFamily(inst.decision, std::move(specs));
}

ExtReal conic_conjugate(const ConicUncertainInstance& inst, std::string_view u, std::string_view x_star,
                        const std::vector<double>& y_star) {
  inst.validate();
  std::size_t k = inst.scenarios.size();
  for (std::size_t i = 0; i < inst.scenarios.size(); ++i)
    if (inst.scenarios[i].u == u) k = i;
  if (k == inst.scenarios.size()) throw Error(ErrorCode::UnknownScenario, "no scenario labeled '" + std::string(u) + "'");
  if (y_star.size() != inst.dimension(k)) throw Error(ErrorCode::DimensionMismatch, "multiplier has the wrong length");
  if (std::any_of(y_star.begin(), y_star.end(), [](double v) { return v < 0.0; })) return ExtReal::pos_inf();
  const std::size_t xs = inst.decision.index(Side::Dual, x_star);
  std::vector<ExtReal> terms;
  for (std::size_t x = 0; x < inst.f.size(); ++x) {
    if (inst.f[x].is_pos_inf()) continue;
    terms.emplace_back(inst.decision.pair(xs, x) - inst.f[x].value() - dot(y_star, inst.scenarios[k].H[x]));
  }
  return finite_sup(terms);
}

bool robust_feasible(const ConicUncertainInstance& inst, std::size_t x) {
  return std::all_of(inst.scenarios.begin(), inst.scenarios.end(), [x](const ConicScenario& s) {
    return std::all_of(s.H[x].begin(), s.H[x].end(), [](double v) { return v <= 0.0; });
  });
}

FarkasOutcome uncertain_farkas(const ConicUncertainInstance& inst, double r, double tol) {
  inst.validate();
  FarkasOutcome out;
  out.i = true;
  for (std::size_t x = 0; x < inst.f.size(); ++x) {
    if (robust_feasible(inst, x) && inst.f[x].is_finite() && inst.f[x].value() < r - tol) out.i = false;
  }
  for (const auto& s : inst.scenarios) {
    for (const auto& y : s.dual_grid) {
      bool ok = true;
      for (std::size_t x = 0; x < inst.f.size() && ok; ++x) {
        if (!inst.f[x].is_finite()) continue;
        ok = inst.f[x].value() + dot(y, s.H[x]) >= r - tol;
      }
      if (ok) {
        out.ii = true;
        out.witness = ConicWitness{s.u, y};
        return out;
      }
    }
  }
  return out;
}

OptimalityOutcome optimality_test(const ConicUncertainInstance& inst, std::string_view x_bar, double tol) {
  inst.validate();
  const std::size_t x = inst.decision.index(Side::Primal, x_bar);
  if (!robust_feasible(inst, x)) {
    throw Error(ErrorCode::InfeasiblePoint, "'" + std::string(x_bar) + "' violates a constraint");
  }
  if (!inst.f[x].is_finite()) throw Error(ErrorCode::NonFinitePoint, "f is +inf at '" + std::string(x_bar) + "'");
  const FarkasOutcome fk = uncertain_farkas(inst, inst.f[x].value(), tol);
  return OptimalityOutcome{fk.i, fk.witness};
}

}  // namespace rdl
