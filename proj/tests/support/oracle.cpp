#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

namespace oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Candidate splits of `budget`: a uniform grid plus every activity gap value.
std::vector<double> split_candidates(const Raw& r, double budget) {
  std::vector<double> out;
  const int steps = 2000;
  for (int i = 0; i <= steps; ++i) out.push_back(budget * i / steps);
  for (std::size_t x = 0; x < r.x_labels.size(); ++x)
    for (const auto& s : r.sc) {
      const double g = p(r, x) - s.F[x][s.y0];
      if (std::isfinite(g) && g >= 0.0 && g <= budget) out.push_back(g);
    }
  return out;
}

bool in_j(const Raw& r, std::size_t k, std::size_t x, double eps1, double tol) {
  const double px = p(r, x);
  return std::isfinite(px) && px <= r.sc[k].F[x][r.sc[k].y0] + eps1 + tol;
}

// inf over the joint grid of F_u - <(x*, y*), .>.
double tilted_inf(const Raw& r, std::size_t k, std::size_t ys, std::size_t xs) {
  const RawScenario& s = r.sc[k];
  double lo = kInf;
  for (std::size_t a = 0; a < s.F.size(); ++a)
    for (std::size_t y = 0; y < s.F[a].size(); ++y) lo = std::min(lo, s.F[a][y] - r.pair[xs][a] - s.pair[ys][y]);
  return lo;
}

// (x, 0) in eps2-argmin of F_u - <(x*, y*), .>, given that function's infimum.
bool in_m(const Raw& r, std::size_t k, std::size_t ys, std::size_t xs, std::size_t x, double lo, double eps2,
          double tol) {
  const RawScenario& s = r.sc[k];
  const double v = s.F[x][s.y0] - r.pair[xs][x] - s.pair[ys][s.y0];
  return std::isfinite(lo) && std::isfinite(v) && v <= lo + eps2 + tol;
}

}  // namespace

Raw from_family(const rdl::PerturbationFamily& fam) {
  Raw r;
  r.x_labels = fam.decision().labels(rdl::Side::Primal);
  r.xs_labels = fam.decision().labels(rdl::Side::Dual);
  r.pair = fam.decision().pairing_table();
  for (const auto& spec : fam.specs()) {
    RawScenario s;
    s.pair = spec.parameter.pairing_table();
    s.y0 = spec.parameter.zero(rdl::Side::Primal);
    for (const auto& row : spec.F) {
      std::vector<double> v;
      for (auto e : row) v.push_back(e.value());
      s.F.push_back(std::move(v));
    }
    r.sc.push_back(std::move(s));
  }
  return r;
}

double p(const Raw& r, std::size_t x) {
  double v = -kInf;
  for (const auto& s : r.sc) v = std::max(v, s.F[x][s.y0]);
  return v;
}

double conj(const Raw& r, std::size_t k, std::size_t xs, std::size_t ys) {
  const RawScenario& s = r.sc[k];
  double v = -kInf;
  for (std::size_t x = 0; x < s.F.size(); ++x)
    for (std::size_t y = 0; y < s.F[x].size(); ++y)
      if (std::isfinite(s.F[x][y])) v = std::max(v, r.pair[xs][x] + s.pair[ys][y] - s.F[x][y]);
  return v;
}

double p_star(const Raw& r, std::size_t xs) {
  double v = -kInf;
  for (std::size_t x = 0; x < r.x_labels.size(); ++x) {
    const double px = p(r, x);
    if (std::isfinite(px)) v = std::max(v, r.pair[xs][x] - px);
  }
  return v;
}

double q(const Raw& r, std::size_t xs) {
  double v = kInf;
  for (std::size_t k = 0; k < r.sc.size(); ++k)
    for (std::size_t ys = 0; ys < r.sc[k].pair.size(); ++ys) v = std::min(v, conj(r, k, xs, ys));
  return v;
}

double q_biconj(const Raw& r, std::size_t xs) {
  // q* on X, then q** on X*.
  bool neg_inf = false;
  for (std::size_t a = 0; a < r.xs_labels.size(); ++a) neg_inf = neg_inf || q(r, a) == -kInf;
  if (neg_inf) return -kInf;  // q* = +inf everywhere, so q** = -inf
  std::vector<double> qs(r.x_labels.size(), -kInf);
  for (std::size_t x = 0; x < qs.size(); ++x)
    for (std::size_t a = 0; a < r.xs_labels.size(); ++a) {
      const double qa = q(r, a);
      if (qa != kInf) qs[x] = std::max(qs[x], r.pair[a][x] - qa);
    }
  bool qs_neg_inf = std::any_of(qs.begin(), qs.end(), [](double v) { return v == -kInf; });
  if (qs_neg_inf) return kInf;
  double v = -kInf;
  for (std::size_t x = 0; x < qs.size(); ++x)
    if (qs[x] != kInf) v = std::max(v, r.pair[xs][x] - qs[x]);
  return v;
}

Labels mp(const Raw& r, std::size_t xs, double eps, double tol) {
  double lo = kInf;
  for (std::size_t x = 0; x < r.x_labels.size(); ++x) lo = std::min(lo, p(r, x) - r.pair[xs][x]);
  Labels out;
  if (!std::isfinite(lo)) return out;
  for (std::size_t x = 0; x < r.x_labels.size(); ++x) {
    const double v = p(r, x) - r.pair[xs][x];
    if (std::isfinite(v) && v <= lo + eps + tol) out.insert(r.x_labels[x]);
  }
  return out;
}

Labels subdiff_p(const Raw& r, std::size_t x, double eps, double tol) {
  Labels out;
  const double px = p(r, x);
  if (!std::isfinite(px)) return out;
  for (std::size_t xs = 0; xs < r.xs_labels.size(); ++xs) {
    const double ps = p_star(r, xs);
    if (std::isfinite(ps) && ps + px <= r.pair[xs][x] + eps + tol) out.insert(r.xs_labels[xs]);
  }
  return out;
}

Labels s_set(const Raw& r, std::size_t xs, double eps, double tol) {
  Labels out;
  const double qv = q(r, xs);
  if (qv == kInf) return out;
  for (std::size_t x = 0; x < r.x_labels.size(); ++x) {
    const double px = p(r, x);
    if (!std::isfinite(px)) continue;
    if (qv == -kInf || px - r.pair[xs][x] <= -qv + eps + tol) out.insert(r.x_labels[x]);
  }
  return out;
}

Labels a_script(const Raw& r, std::size_t xs, double eps, const std::vector<double>& etas, double tol) {
  Labels out(r.x_labels.begin(), r.x_labels.end());
  for (double eta : etas) {
    const double budget = eps + eta;
    Labels level;
    const auto splits = split_candidates(r, budget);
    for (std::size_t k = 0; k < r.sc.size(); ++k)
      for (std::size_t ys = 0; ys < r.sc[k].pair.size(); ++ys) {
        const double lo = tilted_inf(r, k, ys, xs);
        for (std::size_t x = 0; x < r.x_labels.size(); ++x)
          for (double e1 : splits)
            if (in_j(r, k, x, e1, tol) && in_m(r, k, ys, xs, x, lo, budget - e1, tol)) {
              level.insert(r.x_labels[x]);
              break;
            }
      }
    Labels keep;
    std::set_intersection(out.begin(), out.end(), level.begin(), level.end(), std::inserter(keep, keep.begin()));
    out = std::move(keep);
  }
  return out;
}

Labels d_set(const Raw& r, std::size_t x, double eps, double tol) {
  Labels out;
  const double px = p(r, x);
  if (!std::isfinite(px)) return out;
  const auto splits = split_candidates(r, eps);
  for (std::size_t k = 0; k < r.sc.size(); ++k) {
    const RawScenario& s = r.sc[k];
    for (std::size_t xs = 0; xs < r.xs_labels.size(); ++xs)
      for (std::size_t ys = 0; ys < s.pair.size(); ++ys) {
        const double c = conj(r, k, xs, ys);
        for (double e1 : splits) {
          const double e2 = eps - e1;
          const bool active = s.F[x][s.y0] >= px - e1 - tol;  // u in I^e1(x)
          if (active && std::isfinite(c) && c + s.F[x][s.y0] <= r.pair[xs][x] + s.pair[ys][s.y0] + e2 + tol) {
            out.insert(r.xs_labels[xs]);
            break;
          }
        }
      }
  }
  return out;
}

double vertex_min(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                  const std::vector<double>& c, double tol) {
  const std::size_t n = c.size(), m = A.size();
  double best = kInf;
  std::vector<std::size_t> pick(n);
  // Enumerate n-subsets of rows in lexicographic order.
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  if (m < n) return best;
  for (;;) {
    // Solve the square system by Gaussian elimination with partial pivoting.
    std::vector<std::vector<double>> M(n, std::vector<double>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) M[i][j] = A[pick[i]][j];
      M[i][n] = b[pick[i]];
    }
    bool singular = false;
    for (std::size_t col = 0; col < n && !singular; ++col) {
      std::size_t piv = col;
      for (std::size_t i = col + 1; i < n; ++i)
        if (std::abs(M[i][col]) > std::abs(M[piv][col])) piv = i;
      if (std::abs(M[piv][col]) < 1e-12) {
        singular = true;
        break;
      }
      std::swap(M[piv], M[col]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col) continue;
        const double f = M[i][col] / M[col][col];
        for (std::size_t j = col; j <= n; ++j) M[i][j] -= f * M[col][j];
      }
    }
    if (!singular) {
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
      bool feasible = true;
      for (std::size_t r = 0; r < m && feasible; ++r) {
        double ax = 0.0;
        for (std::size_t j = 0; j < n; ++j) ax += A[r][j] * x[j];
        feasible = ax <= b[r] + tol * (1.0 + std::abs(b[r]));
      }
      if (feasible) {
        double v = 0.0;
        for (std::size_t j = 0; j < n; ++j) v += c[j] * x[j];
        best = std::min(best, v);
      }
    }
    // Next combination.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace oracle
