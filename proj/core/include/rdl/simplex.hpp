#pragma once

#include <cstddef>
#include <vector>

namespace rdl {

enum class Sense { Minimize, Maximize };
enum class RowRelation { LessEqual, GreaterEqual, Equal };
enum class LpStatus { Optimal, Unbounded, Infeasible };

const char* to_string(LpStatus s) noexcept;

/// optimize c.x subject to A_i.x (rel_i) b_i; variables are >= 0 unless
/// flagged free. Empty `relations` means every row is <=.
struct LpProblem {
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  std::vector<double> c;
  Sense sense = Sense::Minimize;
  std::vector<RowRelation> relations;
  std::vector<bool> free_vars;
};

struct SimplexOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-9;
  /// Relative acceptance for |primal value - dual value|.
  double duality_gap_tol = 1e-6;
  /// 0 selects 10 * (rows + tableau columns).
  std::size_t max_pivots = 0;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double value = 0.0;
  /// Multipliers y with b.y = c.x at an optimum; y_i is the derivative of the
  /// optimal value with respect to b_i.
  std::vector<double> dual;
  std::size_t pivots = 0;
};

/// Dense two-phase tableau simplex with Bland's rule.
///
/// Throws DimensionMismatch on inconsistent shapes and NumericalBreakdown
/// when the pivot cap is hit or the primal and dual values disagree.
LpResult simplex_solve(const LpProblem& lp, const SimplexOptions& opts = {});

/// Shorthand for rows A x <= b and x >= 0.
LpResult simplex_solve(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                       const std::vector<double>& c, Sense sense, const SimplexOptions& opts = {});

}  // namespace rdl
