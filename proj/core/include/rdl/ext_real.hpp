#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <span>
#include <string>

#include "rdl/error.hpp"

namespace rdl {

/// Absolute tolerance used for value equalities and set-membership tests.
inline constexpr double kDefaultTol = 1e-9;

/// An element of the extended real line: a finite real, +inf or -inf.
///
/// Backed by an IEEE double restricted to non-NaN values, so the total
/// order and negation come for free. The one undefined operation,
/// (+inf) + (-inf), is rejected by ext_sum() instead of producing NaN.
class ExtReal {
 public:
  constexpr ExtReal() noexcept = default;
  // Implicit on purpose: finite literals read naturally in tables.
  ExtReal(double v) : v_(v) {  // NOLINT(google-explicit-constructor)
    if (std::isnan(v)) throw Error(ErrorCode::ValidationError, "NaN is not an extended real");
  }

  static ExtReal pos_inf() noexcept { return from_raw(std::numeric_limits<double>::infinity()); }
  static ExtReal neg_inf() noexcept { return from_raw(-std::numeric_limits<double>::infinity()); }

  bool is_finite() const noexcept { return std::isfinite(v_); }
  bool is_pos_inf() const noexcept { return v_ == std::numeric_limits<double>::infinity(); }
  bool is_neg_inf() const noexcept { return v_ == -std::numeric_limits<double>::infinity(); }

  /// Raw IEEE value; +/-inf for the infinite elements.
  double value() const noexcept { return v_; }

  ExtReal operator-() const noexcept { return from_raw(-v_); }

  friend bool operator==(ExtReal a, ExtReal b) noexcept { return a.v_ == b.v_; }
  friend std::partial_ordering operator<=>(ExtReal a, ExtReal b) noexcept { return a.v_ <=> b.v_; }

 private:
  static ExtReal from_raw(double v) noexcept {
    ExtReal r;
    r.v_ = v;
    return r;
  }

  double v_ = 0.0;
};

/// Extended addition. Throws IndeterminateSum on (+inf) + (-inf).
ExtReal ext_sum(ExtReal a, ExtReal b);

inline ExtReal operator+(ExtReal a, ExtReal b) { return ext_sum(a, b); }
inline ExtReal operator-(ExtReal a, ExtReal b) { return ext_sum(a, -b); }

/// Maximum under the total order; the empty supremum is -inf.
ExtReal finite_sup(std::span<const ExtReal> values) noexcept;

/// Minimum under the total order; the empty infimum is +inf.
ExtReal finite_inf(std::span<const ExtReal> values) noexcept;

/// Equal within `tol` when finite, or the same infinity.
bool approx_equal(ExtReal a, ExtReal b, double tol = kDefaultTol) noexcept;

std::string to_string(ExtReal v);

}  // namespace rdl
