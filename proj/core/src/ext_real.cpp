#include "rdl/ext_real.hpp"

#include <algorithm>
#include <cstdio>

namespace rdl {

ExtReal ext_sum(ExtReal a, ExtReal b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw Error(ErrorCode::IndeterminateSum, "(+inf) + (-inf) is undefined");
  }
  return ExtReal(a.value() + b.value());
}

ExtReal finite_sup(std::span<const ExtReal> values) noexcept {
  ExtReal best = ExtReal::neg_inf();
  for (ExtReal v : values) best = std::max(best, v, [](ExtReal l, ExtReal r) { return l < r; });
  return best;
}

ExtReal finite_inf(std::span<const ExtReal> values) noexcept {
  ExtReal best = ExtReal::pos_inf();
  for (ExtReal v : values) best = std::min(best, v, [](ExtReal l, ExtReal r) { return l < r; });
  return best;
}

bool approx_equal(ExtReal a, ExtReal b, double tol) noexcept {
  if (a.is_finite() && b.is_finite()) return std::abs(a.value() - b.value()) <= tol;
  return a == b;
}

std::string to_string(ExtReal v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v.value());
  return buf;
}

}  // namespace rdl
