#include "rdl/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rdl/error.hpp"

namespace rdl {

const char* to_string(LpStatus s) noexcept {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

enum class ColKind { Structural, Slack, Artificial };

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_((rows + 1) * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t i, std::size_t j) { return t_[i * (n_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * (n_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, n_); }
  // Row m_ holds reduced costs, with -objective in the rhs slot.
  double& cost(std::size_t j) { return at(m_, j); }
  double objective() const { return -at(m_, n_); }

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const double pv = at(r, c);
    for (std::size_t j = 0; j <= n_; ++j) at(r, j) /= pv;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= n_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  // Installs reduced costs for cost vector `c` given the current basis.
  void price(const std::vector<double>& c) {
    for (std::size_t j = 0; j <= n_; ++j) at(m_, j) = j < n_ ? c[j] : 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = c[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= n_; ++j) at(m_, j) -= cb * at(i, j);
    }
  }

 private:
  std::size_t m_, n_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

enum class Outcome { Optimal, Unbounded };

// Bland's rule: lowest-index improving column enters; among tied ratios the
// row whose basic variable has the lowest index leaves.
Outcome run(Tableau& tab, const std::vector<char>& may_enter, const SimplexOptions& opts, std::size_t cap,
            std::size_t& pivots) {
  for (;;) {
    std::size_t enter = tab.cols();
    for (std::size_t j = 0; j < tab.cols(); ++j) {
      if (may_enter[j] && tab.cost(j) < -opts.optimality_tol) {
        enter = j;
        break;
      }
    }
    if (enter == tab.cols()) return Outcome::Optimal;

    std::size_t leave = tab.rows();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      const double a = tab.at(i, enter);
      if (a <= opts.pivot_tol) continue;
      const double ratio = std::max(0.0, tab.rhs(i)) / a;
      if (leave == tab.rows()) {
        leave = i;
        best = ratio;
        continue;
      }
      const double slack = 1e-12 * std::max(1.0, best);
      if (ratio < best - slack) {
        leave = i;
        best = ratio;
      } else if (ratio <= best + slack && tab.basis()[i] < tab.basis()[leave]) {
        leave = i;
        best = std::min(best, ratio);
      }
    }
    if (leave == tab.rows()) return Outcome::Unbounded;
    if (++pivots > cap) {
      throw Error(ErrorCode::NumericalBreakdown, "simplex pivot cap of " + std::to_string(cap) + " reached");
    }
    tab.pivot(leave, enter);
  }
}

}  // namespace

LpResult simplex_solve(const LpProblem& lp, const SimplexOptions& opts) {
  const std::size_t m = lp.A.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw Error(ErrorCode::DimensionMismatch, "b must have one entry per row of A");
  if (!lp.relations.empty() && lp.relations.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "relations must have one entry per row");
  }
  if (!lp.free_vars.empty() && lp.free_vars.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "free_vars must have one entry per variable");
  }
  for (const auto& row : lp.A) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "row length of A differs from length of c");
    for (double v : row)
      if (!std::isfinite(v)) throw Error(ErrorCode::ValidationError, "non-finite LP coefficient");
  }
  for (double v : lp.b)
    if (!std::isfinite(v)) throw Error(ErrorCode::ValidationError, "non-finite LP right-hand side");
  for (double v : lp.c)
    if (!std::isfinite(v)) throw Error(ErrorCode::ValidationError, "non-finite LP objective");

  // Columns: structural (free variables split into +/- parts), then one
  // slack or surplus per inequality, then one artificial per >= or = row.
  std::vector<std::size_t> plus(n), minus(n, SIZE_MAX);
  std::size_t ncol = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus[j] = ncol++;
    if (!lp.free_vars.empty() && lp.free_vars[j]) minus[j] = ncol++;
  }

  std::vector<double> sigma(m, 1.0);
  std::vector<RowRelation> rel(m, RowRelation::LessEqual);
  for (std::size_t i = 0; i < m; ++i) {
    if (!lp.relations.empty()) rel[i] = lp.relations[i];
    if (lp.b[i] < 0.0) {
      sigma[i] = -1.0;
      if (rel[i] == RowRelation::LessEqual) rel[i] = RowRelation::GreaterEqual;
      else if (rel[i] == RowRelation::GreaterEqual) rel[i] = RowRelation::LessEqual;
    }
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX), art_col(m, SIZE_MAX), id_col(m);
  for (std::size_t i = 0; i < m; ++i)
    if (rel[i] != RowRelation::Equal) slack_col[i] = ncol++;
  const std::size_t first_art = ncol;
  for (std::size_t i = 0; i < m; ++i)
    if (rel[i] != RowRelation::LessEqual) art_col[i] = ncol++;

  Tableau tab(m, ncol);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tab.at(i, plus[j]) = sigma[i] * lp.A[i][j];
      if (minus[j] != SIZE_MAX) tab.at(i, minus[j]) = -sigma[i] * lp.A[i][j];
    }
    tab.rhs(i) = sigma[i] * lp.b[i];
    if (rel[i] == RowRelation::LessEqual) {
      tab.at(i, slack_col[i]) = 1.0;
      id_col[i] = slack_col[i];
    } else {
      if (slack_col[i] != SIZE_MAX) tab.at(i, slack_col[i]) = -1.0;
      tab.at(i, art_col[i]) = 1.0;
      id_col[i] = art_col[i];
    }
    tab.basis()[i] = id_col[i];
  }

  const std::size_t cap = opts.max_pivots ? opts.max_pivots : 10 * (m + ncol);
  LpResult res;

  // Phase 1: minimize the sum of artificials.
  if (first_art < ncol) {
    std::vector<double> c1(ncol, 0.0);
    std::fill(c1.begin() + static_cast<std::ptrdiff_t>(first_art), c1.end(), 1.0);
    tab.price(c1);
    std::vector<char> all(ncol, 1);
    run(tab, all, opts, cap, res.pivots);
    double bscale = 1.0;
    for (double v : lp.b) bscale = std::max(bscale, std::abs(v));
    if (tab.objective() > opts.feasibility_tol * bscale * static_cast<double>(std::max<std::size_t>(m, 1))) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    // Drive artificials out of the basis; rows where that is impossible are
    // redundant and keep a zero-valued artificial forever.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < first_art) continue;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (std::abs(tab.at(i, j)) > opts.pivot_tol) {
          tab.pivot(i, j);
          ++res.pivots;
          break;
        }
      }
    }
  }

  // Phase 2 on the original objective, as a minimization.
  const double dir = lp.sense == Sense::Minimize ? 1.0 : -1.0;
  std::vector<double> c2(ncol, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    c2[plus[j]] = dir * lp.c[j];
    if (minus[j] != SIZE_MAX) c2[minus[j]] = -dir * lp.c[j];
  }
  tab.price(c2);
  std::vector<char> may_enter(ncol, 1);
  for (std::size_t j = first_art; j < ncol; ++j) may_enter[j] = 0;
  if (run(tab, may_enter, opts, cap, res.pivots) == Outcome::Unbounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  res.status = LpStatus::Optimal;
  std::vector<double> col_value(ncol, 0.0);
  for (std::size_t i = 0; i < m; ++i) col_value[tab.basis()[i]] = tab.rhs(i);
  res.x.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    res.x[j] = col_value[plus[j]] - (minus[j] != SIZE_MAX ? col_value[minus[j]] : 0.0);
  }
  res.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) res.value += lp.c[j] * res.x[j];

  // Reduced cost of a row's initial identity column is -y'_i for the
  // standardized minimization; undo the row flip and the sense flip.
  res.dual.assign(m, 0.0);
  double dual_value = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    res.dual[i] = dir * sigma[i] * -tab.cost(id_col[i]);
    dual_value += lp.b[i] * res.dual[i];
  }
  if (std::abs(res.value - dual_value) > opts.duality_gap_tol * (1.0 + std::abs(res.value))) {
    throw Error(ErrorCode::NumericalBreakdown, "primal and dual objective values disagree");
  }
  return res;
}

LpResult simplex_solve(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                       const std::vector<double>& c, Sense sense, const SimplexOptions& opts) {
  LpProblem lp{A, b, c, sense, {}, {}};
  return simplex_solve(lp, opts);
}

}  // namespace rdl
