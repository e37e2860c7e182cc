#include "rdl/family.hpp"

#include "rdl/conjugate.hpp"

namespace rdl {
namespace {

TabulatedFunction make_p(const std::shared_ptr<const PairedSpace>& decision,
                         const std::vector<std::vector<ExtReal>>& f_zero) {
  std::vector<ExtReal> vals(decision->primal_size(), ExtReal::neg_inf());
  for (const auto& row : f_zero)
    for (std::size_t x = 0; x < row.size(); ++x) vals[x] = std::max(vals[x], row[x], std::less<>());
  return TabulatedFunction(decision, Side::Primal, std::move(vals));
}

}  // namespace

PerturbationFamily::PerturbationFamily(PairedSpace decision, std::vector<ScenarioSpec> specs)
    : decision_(std::make_shared<const PairedSpace>(std::move(decision))),
      p_(decision_, Side::Primal, std::vector<ExtReal>(decision_->primal_size())),
      p_conj_(decision_, Side::Dual, std::vector<ExtReal>(decision_->dual_size())),
      q_(decision_, Side::Dual, std::vector<ExtReal>(decision_->dual_size())) {
  if (specs.empty()) throw Error(ErrorCode::ValidationError, "a family needs at least one scenario");
  const std::size_t nx = decision_->primal_size();
  std::unordered_map<std::string, int> seen;
  for (auto& spec : specs) {
    if (!seen.emplace(spec.label, 0).second) {
      throw Error(ErrorCode::ValidationError, "duplicate scenario label '" + spec.label + "'");
    }
    if (spec.F.size() != nx) {
      throw Error(ErrorCode::DimensionMismatch, "scenario '" + spec.label + "' needs one F row per x");
    }
    auto param = std::make_shared<const PairedSpace>(std::move(spec.parameter));
    auto joint = std::make_shared<const PairedSpace>(PairedSpace::product(*decision_, *param));
    const std::size_t ny = param->primal_size();
    std::vector<ExtReal> vals;
    vals.reserve(nx * ny);
    for (const auto& row : spec.F) {
      if (row.size() != ny) {
        throw Error(ErrorCode::DimensionMismatch, "scenario '" + spec.label + "' needs one F entry per y");
      }
      vals.insert(vals.end(), row.begin(), row.end());
    }
    TabulatedFunction F(joint, Side::Primal, std::move(vals), Codomain::UpperExtended);
    TabulatedFunction Fc = conjugate(F);
    std::vector<ExtReal> fz(nx);
    for (std::size_t x = 0; x < nx; ++x) fz[x] = F[x * ny + param->zero(Side::Primal)];
    f_zero_.push_back(std::move(fz));
    scenarios_.push_back(Scenario{std::move(spec.label), std::move(param), std::move(joint), std::move(F),
                                  std::move(Fc)});
  }

  p_ = make_p(decision_, f_zero_);
  dom_p_nonempty_ = p_.has_finite_value();
  p_conj_ = conjugate(p_);

  std::vector<ExtReal> qv(decision_->dual_size(), ExtReal::pos_inf());
  for (std::size_t xs = 0; xs < qv.size(); ++xs)
    for (std::size_t k = 0; k < scenarios_.size(); ++k)
      for (std::size_t ys = 0; ys < ny_star(k); ++ys) qv[xs] = std::min(qv[xs], conj(k, xs, ys), std::less<>());
  q_ = TabulatedFunction(decision_, Side::Dual, std::move(qv), Codomain::Extended);
}

std::size_t PerturbationFamily::scenario_index(std::string_view label) const {
  for (std::size_t k = 0; k < scenarios_.size(); ++k)
    if (scenarios_[k].label == label) return k;
  throw Error(ErrorCode::UnknownScenario, "no scenario labeled '" + std::string(label) + "'");
}

std::vector<DualIndex> PerturbationFamily::q_argmin(std::size_t x_star, double tol) const {
  std::vector<DualIndex> out;
  const ExtReal qv = q_[x_star];
  if (qv.is_pos_inf()) return out;
  for (std::size_t k = 0; k < scenarios_.size(); ++k)
    for (std::size_t ys = 0; ys < ny_star(k); ++ys)
      if (approx_equal(conj(k, x_star, ys), qv, tol)) out.push_back({k, ys});
  return out;
}

std::vector<ScenarioSpec> PerturbationFamily::specs() const {
  std::vector<ScenarioSpec> out;
  for (const auto& s : scenarios_) {
    const std::size_t ny = s.parameter->primal_size();
    std::vector<std::vector<ExtReal>> F(nx(), std::vector<ExtReal>(ny));
    for (std::size_t x = 0; x < nx(); ++x)
      for (std::size_t y = 0; y < ny; ++y) F[x][y] = s.F[x * ny + y];
    out.push_back(ScenarioSpec{s.label, *s.parameter, std::move(F)});
  }
  return out;
}

TabulatedFunction robust_objective(const PerturbationFamily& fam) { return fam.p(); }

TabulatedFunction dual_value_fn(const PerturbationFamily& fam) { return fam.q(); }

}  // namespace rdl
