#include "rdl/lsip.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "rdl/error.hpp"

namespace rdl {
namespace {

constexpr double kSupportTol = 1e-10;

LsipSolution solve_rows(const LinearSipInstance& inst, const std::vector<std::size_t>& rows) {
  LpProblem lp;
  lp.c = inst.c;
  lp.sense = Sense::Minimize;
  lp.free_vars.assign(inst.n, true);
  for (std::size_t r : rows) {
    lp.A.push_back(inst.rows.at(r).a);
    lp.b.push_back(inst.rows[r].b);
  }
  LsipSolution out;
  if (rows.empty()) {
    // No constraints: bounded only for c = 0.
    const bool zero = std::all_of(inst.c.begin(), inst.c.end(), [](double v) { return v == 0.0; });
    out.status = zero ? LpStatus::Optimal : LpStatus::Unbounded;
    out.value = zero ? ExtReal(0.0) : ExtReal::neg_inf();
    out.x.assign(inst.n, 0.0);
    return out;
  }
  const LpResult res = simplex_solve(lp);
  out.status = res.status;
  switch (res.status) {
    case LpStatus::Optimal:
      out.value = res.value;
      out.x = res.x;
      break;
    case LpStatus::Unbounded: out.value = ExtReal::neg_inf(); break;
    case LpStatus::Infeasible: out.value = ExtReal::pos_inf(); break;
  }
  return out;
}

std::vector<std::size_t> all_rows(const LinearSipInstance& inst) {
  std::vector<std::size_t> out(inst.rows.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> rows_of(const LinearSipInstance& inst, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& t : labels) out.push_back(inst.row_index(t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool values_match(ExtReal a, ExtReal b) { return approx_equal(a, b, kLsipTol); }

}  // namespace

void LinearSipInstance::validate() const {
  if (n == 0) throw Error(ErrorCode::ValidationError, "LSIP dimension must be positive");
  if (c.size() != n) throw Error(ErrorCode::DimensionMismatch, "c must have n entries");
  if (rows.empty()) throw Error(ErrorCode::ValidationError, "LSIP index set T is empty");
  std::unordered_set<std::string> seen;
  for (const auto& r : rows) {
    if (!seen.insert(r.t).second) throw Error(ErrorCode::ValidationError, "duplicate row label '" + r.t + "'");
    if (r.a.size() != n) throw Error(ErrorCode::DimensionMismatch, "row '" + r.t + "' must have n coefficients");
    for (double v : r.a)
      if (!std::isfinite(v)) throw Error(ErrorCode::ValidationError, "row '" + r.t + "' has a non-finite entry");
    if (!std::isfinite(r.b)) throw Error(ErrorCode::ValidationError, "row '" + r.t + "' has a non-finite b");
  }
  for (double v : c)
    if (!std::isfinite(v)) throw Error(ErrorCode::ValidationError, "c has a non-finite entry");
}

std::size_t LinearSipInstance::row_index(const std::string& t) const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].t == t) return i;
  throw Error(ErrorCode::UnknownPoint, "no LSIP row labeled '" + t + "'");
}

bool is_feasible(const LinearSipInstance& inst) {
  LinearSipInstance zero_obj = inst;
  std::fill(zero_obj.c.begin(), zero_obj.c.end(), 0.0);
  return solve_robust_counterpart(zero_obj).status != LpStatus::Infeasible;
}

LsipSolution solve_robust_counterpart(const LinearSipInstance& inst) {
  inst.validate();
  return solve_rows(inst, all_rows(inst));
}

LsipSolution solve_subsystem(const LinearSipInstance& inst, const std::vector<std::size_t>& rows) {
  inst.validate();
  for (std::size_t r : rows)
    if (r >= inst.rows.size()) throw Error(ErrorCode::UnknownPoint, "row position out of range");
  return solve_rows(inst, rows);
}

HaarDualResult haar_dual(const LinearSipInstance& inst) {
  inst.validate();
  const std::size_t T = inst.rows.size();
  LpProblem lp;
  lp.sense = Sense::Minimize;
  lp.A.assign(inst.n, std::vector<double>(T));
  lp.b.resize(inst.n);
  lp.relations.assign(inst.n, RowRelation::Equal);
  lp.c.resize(T);
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t i = 0; i < inst.n; ++i) lp.A[i][t] = inst.rows[t].a[i];
    lp.c[t] = inst.rows[t].b;
  }
  for (std::size_t i = 0; i < inst.n; ++i) lp.b[i] = -inst.c[i];

  const LpResult res = simplex_solve(lp);
  HaarDualResult out;
  out.status = res.status;
  switch (res.status) {
    case LpStatus::Infeasible: out.value = ExtReal::neg_inf(); break;
    case LpStatus::Unbounded: out.value = ExtReal::pos_inf(); break;
    case LpStatus::Optimal: {
      out.value = -res.value;
      DualCertificate cert;
      cert.value = -res.value;
      for (std::size_t t = 0; t < T; ++t)
        if (res.x[t] > kSupportTol) cert.support.emplace_back(inst.rows[t].t, res.x[t]);
      out.certificate = std::move(cert);
      break;
    }
  }
  return out;
}

DiscretizationResult discretize(const LinearSipInstance& inst, const std::vector<std::vector<std::string>>& schedule) {
  inst.validate();
  if (schedule.empty()) throw Error(ErrorCode::ValidationError, "discretization schedule is empty");
  DiscretizationResult out;
  std::vector<std::size_t> prev;
  for (const auto& step : schedule) {
    std::vector<std::size_t> rows = rows_of(inst, step);
    if (!std::includes(rows.begin(), rows.end(), prev.begin(), prev.end())) {
      throw Error(ErrorCode::ValidationError, "discretization schedule is not nested");
    }
    const LsipSolution sol = solve_rows(inst, rows);
    if (!out.steps.empty() && sol.value < out.steps.back().value && !values_match(sol.value, out.steps.back().value)) {
      out.nondecreasing = false;
    }
    out.steps.push_back({rows.size(), sol.value, sol.status});
    prev = std::move(rows);
  }
  out.full_value = solve_rows(inst, all_rows(inst)).value;
  out.reaches_final = values_match(out.steps.back().value, out.full_value);
  return out;
}

ReducibilityResult reducibility_check(const LinearSipInstance& inst,
                                      const std::vector<std::vector<std::string>>& candidates) {
  inst.validate();
  ReducibilityResult out;
  out.value = solve_rows(inst, all_rows(inst)).value;
  if (out.value.is_neg_inf()) {
    // Any single constraint already gives the value -inf.
    out.reducible = true;
    out.witness = std::vector<std::string>{inst.rows.front().t};
    return out;
  }
  for (const auto& cand : candidates) {
    if (values_match(solve_rows(inst, rows_of(inst, cand)).value, out.value)) {
      out.reducible = true;
      out.witness = cand;
      break;
    }
  }
  if (out.value.is_finite()) {
    HaarDualResult dual = haar_dual(inst);
    if (dual.certificate && values_match(dual.value, out.value)) {
      out.dual_attained = true;
      out.certificate = std::move(dual.certificate);
    }
  }
  return out;
}

FarkasResult farkas_certificate(const LinearSipInstance& inst, double r) {
  inst.validate();
  if (!std::isfinite(r)) throw Error(ErrorCode::ValidationError, "Farkas level r must be finite");
  const std::size_t T = inst.rows.size();
  // Variables lambda_1..lambda_T, mu. Rows: n coefficient rows, one level row.
  LpProblem lp;
  lp.sense = Sense::Minimize;
  lp.A.assign(inst.n + 1, std::vector<double>(T + 1, 0.0));
  lp.b.assign(inst.n + 1, 0.0);
  lp.relations.assign(inst.n + 1, RowRelation::Equal);
  lp.c.assign(T + 1, 0.0);
  lp.c[T] = 1.0;
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t i = 0; i < inst.n; ++i) lp.A[i][t] = inst.rows[t].a[i];
    lp.A[inst.n][t] = inst.rows[t].b;
  }
  lp.A[inst.n][T] = 1.0;
  for (std::size_t i = 0; i < inst.n; ++i) lp.b[i] = -inst.c[i];
  lp.b[inst.n] = -r;

  const LpResult res = simplex_solve(lp);
  FarkasResult out;
  if (res.status != LpStatus::Optimal) return out;
  out.holds = true;
  out.mu = res.x[T];
  DualCertificate cert;
  cert.value = r;
  for (std::size_t t = 0; t < T; ++t)
    if (res.x[t] > kSupportTol) cert.support.emplace_back(inst.rows[t].t, res.x[t]);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace rdl
