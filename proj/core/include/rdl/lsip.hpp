#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdl/ext_real.hpp"
#include "rdl/simplex.hpp"

namespace rdl {

/// One constraint a_t . x <= b_t.
struct LsipRow {
  std::string t;
  std::vector<double> a;
  double b = 0.0;
};

/// minimize c . x over x in R^n subject to a_t . x <= b_t for every t in T.
struct LinearSipInstance {
  std::size_t n = 0;
  std::vector<double> c;
  std::vector<LsipRow> rows;

  /// Throws ValidationError / DimensionMismatch on a malformed instance.
  void validate() const;
  /// Row position of label t; throws UnknownPoint.
  std::size_t row_index(const std::string& t) const;
};

/// Finitely supported multipliers lambda_t > 0 and the dual value they certify.
struct DualCertificate {
  std::vector<std::pair<std::string, double>> support;
  double value = 0.0;
};

struct LsipSolution {
  LpStatus status = LpStatus::Infeasible;
  /// Optimal value; -inf when unbounded, +inf when infeasible.
  ExtReal value;
  std::vector<double> x;
};

struct HaarDualResult {
  LpStatus status = LpStatus::Infeasible;  // status of the multiplier LP
  /// sup of -sum lambda_t b_t; -inf when no multipliers exist, +inf when unbounded.
  ExtReal value;
  std::optional<DualCertificate> certificate;
};

struct DiscretizationStep {
  std::size_t size = 0;
  ExtReal value;
  LpStatus status = LpStatus::Infeasible;
};

struct DiscretizationResult {
  std::vector<DiscretizationStep> steps;
  ExtReal full_value;
  bool nondecreasing = true;
  /// Last step value matches the full problem within 1e-6.
  bool reaches_final = false;
};

struct ReducibilityResult {
  bool reducible = false;
  std::optional<std::vector<std::string>> witness;
  ExtReal value;
  /// The multiplier problem attains the robust value.
  bool dual_attained = false;
  std::optional<DualCertificate> certificate;
};

struct FarkasResult {
  bool holds = false;
  std::optional<DualCertificate> certificate;
  double mu = 0.0;
};

inline constexpr double kLsipTol = 1e-6;

bool is_feasible(const LinearSipInstance& inst);

/// The full problem over every row of T.
LsipSolution solve_robust_counterpart(const LinearSipInstance& inst);

/// The relaxation keeping only the listed row positions.
LsipSolution solve_subsystem(const LinearSipInstance& inst, const std::vector<std::size_t>& rows);

/// sup{ -sum lambda_t b_t : sum lambda_t a_t = -c, lambda >= 0 } over all of T.
HaarDualResult haar_dual(const LinearSipInstance& inst);

/// Values of the nested relaxations S_1 ⊆ S_2 ⊆ ... given by row labels.
DiscretizationResult discretize(const LinearSipInstance& inst,
                                const std::vector<std::vector<std::string>>& schedule);

/// Whether some candidate subsystem already attains the full value.
ReducibilityResult reducibility_check(const LinearSipInstance& inst,
                                      const std::vector<std::vector<std::string>>& candidates);

/// Looks for lambda >= 0, mu >= 0 with sum lambda_t (a_t, b_t) + mu (0, 1) = -(c, r),
/// which certifies c . x >= r on the feasible set.
FarkasResult farkas_certificate(const LinearSipInstance& inst, double r);

}  // namespace rdl
