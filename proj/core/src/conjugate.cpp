#include "rdl/conjugate.hpp"

#include <algorithm>
#include <cmath>

namespace rdl {

void require_nonnegative(double eps) {
  if (!(eps >= 0.0)) throw Error(ErrorCode::NegativeEpsilon, "epsilon must be nonnegative");
}

TabulatedFunction conjugate(const TabulatedFunction& h) {
  const PairedSpace& sp = h.space();
  const Side own = h.side();
  const Side other = opposite(own);
  const std::size_t n_other = sp.size(other);

  const bool has_neg_inf =
      std::any_of(h.values().begin(), h.values().end(), [](ExtReal v) { return v.is_neg_inf(); });
  std::vector<ExtReal> out(n_other, has_neg_inf ? ExtReal::pos_inf() : ExtReal::neg_inf());
  if (!has_neg_inf) {
    for (std::size_t k = 0; k < n_other; ++k) {
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t z = 0; z < h.size(); ++z) {
        if (h[z].is_pos_inf()) continue;
        best = std::max(best, sp.pair_from(own, z, k) - h[z].value());
      }
      out[k] = ExtReal(best);
    }
  }
  return TabulatedFunction(h.space_ptr(), other, std::move(out), Codomain::Extended);
}

TabulatedFunction biconjugate(const TabulatedFunction& h) { return conjugate(conjugate(h)); }

namespace detail {

Mask argmin_mask(const std::vector<ExtReal>& values, double eps, double tol) {
  require_nonnegative(eps);
  Mask mask(values.size(), 0);
  ExtReal lo = finite_inf(values);
  if (!lo.is_finite()) return mask;
  const double bound = lo.value() + eps + tol;
  for (std::size_t i = 0; i < values.size(); ++i) {
    mask[i] = values[i].is_finite() && values[i].value() <= bound;
  }
  return mask;
}

std::vector<ExtReal> tilted(const TabulatedFunction& h, std::size_t z_star) {
  std::vector<ExtReal> out(h.size());
  for (std::size_t z = 0; z < h.size(); ++z) {
    out[z] = h[z] - ExtReal(h.space().pair_from(h.side(), z, z_star));
  }
  return out;
}

Mask subdifferential_mask(const TabulatedFunction& h, const TabulatedFunction& h_conj, std::size_t a,
                          double eps, double tol) {
  require_nonnegative(eps);
  Mask mask(h_conj.size(), 0);
  if (!h[a].is_finite()) return mask;
  const double ha = h[a].value();
  for (std::size_t k = 0; k < h_conj.size(); ++k) {
    if (!h_conj[k].is_finite()) continue;
    mask[k] = h_conj[k].value() + ha <= h.space().pair_from(h.side(), a, k) + eps + tol;
  }
  return mask;
}

}  // namespace detail

PointSet eps_argmin(const TabulatedFunction& h, double eps, double tol) {
  return PointSet::from_mask(h.space().labels(h.side()), detail::argmin_mask(h.values(), eps, tol));
}

PointSet eps_subdifferential(const TabulatedFunction& h, std::string_view a, double eps, double tol) {
  require_nonnegative(eps);
  const std::size_t ia = h.space().index(h.side(), a);
  TabulatedFunction hc = conjugate(h);
  return PointSet::from_mask(h.space().labels(hc.side()), detail::subdifferential_mask(h, hc, ia, eps, tol));
}

PointSet m_eps(const TabulatedFunction& h, std::string_view z_star, double eps, double tol) {
  const std::size_t k = h.space().index(opposite(h.side()), z_star);
  return PointSet::from_mask(h.space().labels(h.side()), detail::argmin_mask(detail::tilted(h, k), eps, tol));
}

}  // namespace rdl
