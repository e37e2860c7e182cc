#pragma once

#include <string_view>

#include "rdl/family.hpp"
#include "rdl/point_set.hpp"

namespace rdl {

// Specialized formulas for two family shapes, computed through the generic
// conjugate calculus rather than the two-gap closed forms, so they can be
// compared against the general mappings.
//
// Single scenario: U = {u}, F = F_u. Then J^eps(u) = dom F(., 0) and the
// set mappings reduce to eps-minimizers of F over X x Y.
//
// Constant in y: F_u(x, y) = f_u(x) for every y. Then p = sup_u f_u and the
// mappings are built from f_u and its conjugate over (X, X*).

bool is_single_scenario(const PerturbationFamily& fam) noexcept;
bool is_constant_in_y(const PerturbationFamily& fam) noexcept;

/// inf_x {F(x, 0) - <x*, x>} = sup_y* -F*(x*, y*). Single-scenario families only.
bool perturbational_duality_holds(const PerturbationFamily& fam, std::string_view x_star,
                                  double tol = kDefaultTol);

/// (sup_u f_u)*(x*) = inf_u f_u*(x*). Constant-in-y families only.
bool inf_sup_duality_holds(const PerturbationFamily& fam, std::string_view x_star, double tol = kDefaultTol);

/// Union over y* of {x : (x, 0) in (M^eps F)(x*, y*)}.
PointSet single_a_script(const PerturbationFamily& fam, std::string_view x_star, double eps,
                         double tol = kDefaultTol);
/// {x : (x, 0) in (M^eps F)(x*, y*)}.
PointSet single_b(const PerturbationFamily& fam, std::string_view y_star, std::string_view x_star, double eps,
                  double tol = kDefaultTol);
/// Projection onto X* of the eps-subdifferential of F at (x, 0).
PointSet single_d(const PerturbationFamily& fam, std::string_view x, double eps, double tol = kDefaultTol);

/// Union over u and eps1 + eps2 = eps of J^eps1(u) intersected with (M^eps2 f_u)(x*).
PointSet constant_a_script(const PerturbationFamily& fam, std::string_view x_star, double eps,
                           double tol = kDefaultTol);
/// Union over eps1 + eps2 = eps of J^eps1(u) intersected with (M^eps2 f_u)(x*).
PointSet constant_b(const PerturbationFamily& fam, std::string_view u, std::string_view x_star, double eps,
                    double tol = kDefaultTol);
/// Union over eps1 + eps2 = eps and u in I^eps1(x) of the eps2-subdifferential of f_u at x.
PointSet constant_d(const PerturbationFamily& fam, std::string_view x, double eps, double tol = kDefaultTol);

/// f_u = F_u(., 0_u) as a function on X.
TabulatedFunction scenario_objective(const PerturbationFamily& fam, std::size_t k);

}  // namespace rdl
