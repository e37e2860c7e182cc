#pragma once

#include <string_view>
#include <vector>

#include "rdl/ext_real.hpp"
#include "rdl/point_set.hpp"
#include "rdl/tabulated_function.hpp"

namespace rdl {

/// h*(z*) = sup_z <z*, z> - h(z), tabulated on the side opposite to h.
///
/// Points where h = +inf contribute nothing. If h takes -inf anywhere the
/// conjugate is +inf everywhere.
TabulatedFunction conjugate(const TabulatedFunction& h);

/// h** = (h*)*, back on h's own side. Always h** <= h.
TabulatedFunction biconjugate(const TabulatedFunction& h);

/// {z : h(z) finite, h(z) <= inf h + eps}, or empty when inf h is not finite.
PointSet eps_argmin(const TabulatedFunction& h, double eps, double tol = kDefaultTol);

/// {z* : h*(z*) finite, h*(z*) + h(a) <= <z*, a> + eps}, empty if h(a) is not finite.
PointSet eps_subdifferential(const TabulatedFunction& h, std::string_view a, double eps,
                             double tol = kDefaultTol);

/// eps-argmin of z -> h(z) - <z*, z>: the inverse of the eps-subdifferential.
PointSet m_eps(const TabulatedFunction& h, std::string_view z_star, double eps, double tol = kDefaultTol);

/// Throws NegativeEpsilon unless eps >= 0.
void require_nonnegative(double eps);

namespace detail {

/// eps-argmin over a raw value vector.
Mask argmin_mask(const std::vector<ExtReal>& values, double eps, double tol);

/// h(z) - <z*, z> over h's grid, for the point z* of the opposite side.
std::vector<ExtReal> tilted(const TabulatedFunction& h, std::size_t z_star);

/// eps-subdifferential given a precomputed conjugate.
Mask subdifferential_mask(const TabulatedFunction& h, const TabulatedFunction& h_conj, std::size_t a,
                          double eps, double tol);

}  // namespace detail
}  // namespace rdl
