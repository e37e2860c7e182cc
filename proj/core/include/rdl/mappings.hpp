#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rdl/family.hpp"
#include "rdl/point_set.hpp"

namespace rdl {

// Set-valued mappings of a perturbation family. Primal-valued mappings return
// labels of X, dual-valued ones labels of X*, index-valued ones scenario
// labels. Every membership test allows the absolute slack `tol`.
//
// Two nonnegative quantities drive most of them, for x with p(x) finite:
//   activity gap  g1(u, x)        = p(x) - F_u(x, 0_u)
//   Fenchel gap   g2(u, y*, x*, x) = F_u*(x*, y*) + F_u(x, 0_u) - <x*, x>
// An (eps1, eps2) split with g1 <= eps1 and g2 <= eps2 exists for a budget b
// exactly when g1 + g2 <= b, so unions over splits reduce to that test.

/// S^eps(x*): all of dom p if q(x*) = -inf, empty if q(x*) = +inf, else
/// {x : p(x) - <x*, x> <= -q(x*) + eps}.
PointSet s_eps(const PerturbationFamily& fam, std::string_view x_star, double eps, double tol = kDefaultTol);

/// J^eps(u) = {x in dom p : p(x) <= F_u(x, 0_u) + eps}.
PointSet j_eps(const PerturbationFamily& fam, std::string_view u, double eps, double tol = kDefaultTol);

/// I^eps(x) = {u : F_u(x, 0_u) >= p(x) - eps}, empty when p(x) is not finite.
PointSet i_eps(const PerturbationFamily& fam, std::string_view x, double eps, double tol = kDefaultTol);

/// {x in J^eps1(u) : (x, 0_u) in (M^eps2 F_u)(x*, y*)}, with M evaluated on X x Y_u.
PointSet a_pair(const PerturbationFamily& fam, std::string_view u, std::string_view y_star,
                std::string_view x_star, EpsPair split, double tol = kDefaultTol);

/// The eta-intersection of all A-pairs, via its least-budget closed form.
PointSet a_script(const PerturbationFamily& fam, std::string_view x_star, double eps, double tol = kDefaultTol);

/// The same set evaluated from its definition: intersect over the given
/// eta values the union of a_pair over (u, y*) and budget splits.
PointSet a_script_oracle(const PerturbationFamily& fam, std::string_view x_star, double eps,
                         const std::vector<double>& eta_schedule, double tol = kDefaultTol);

/// B^eps_(u,y*)(x*) = {x in dom p : g1 + g2 <= eps}.
PointSet b_pair(const PerturbationFamily& fam, std::string_view u, std::string_view y_star,
                std::string_view x_star, double eps, double tol = kDefaultTol);

/// Union of b_pair over every (u, y*).
PointSet b_union(const PerturbationFamily& fam, std::string_view x_star, double eps, double tol = kDefaultTol);

/// D^eps(x) = {x* : some (u, y*) has g1 + g2 <= eps}.
PointSet d_eps(const PerturbationFamily& fam, std::string_view x, double eps, double tol = kDefaultTol);

/// C^eps(x) = {x* : inf over (u, y*) of g1 + g2 <= eps}.
PointSet c_eps(const PerturbationFamily& fam, std::string_view x, double eps, double tol = kDefaultTol);

/// Intersection of d_eps(x, eps + eta) over the given eta values.
PointSet c_eps_oracle(const PerturbationFamily& fam, std::string_view x, double eps,
                      const std::vector<double>& eta_schedule, double tol = kDefaultTol);

/// The eps = 0 versions at x, plus (Mp)(x*) for every x*.
struct ExactMaps {
  PointSet D;
  PointSet C;
  PointSet I;
  std::map<std::string, PointSet> Mp;
};
ExactMaps exact_maps(const PerturbationFamily& fam, std::string_view x, double tol = kDefaultTol);

namespace detail {

/// g1 + g2 as above; +inf when p(x), F_u(x, 0_u) or F_u*(x*, y*) is not finite.
ExtReal two_gap(const PerturbationFamily& fam, std::size_t k, std::size_t y_star, std::size_t x_star,
                std::size_t x);

Mask s_mask(const PerturbationFamily& fam, std::size_t x_star, double eps, double tol);
Mask j_mask(const PerturbationFamily& fam, std::size_t k, double eps, double tol);
Mask i_mask(const PerturbationFamily& fam, std::size_t x, double eps, double tol);
Mask a_pair_mask(const PerturbationFamily& fam, std::size_t k, std::size_t y_star, std::size_t x_star,
                 EpsPair split, double tol);
Mask a_script_mask(const PerturbationFamily& fam, std::size_t x_star, double eps, double tol);
Mask a_script_oracle_mask(const PerturbationFamily& fam, std::size_t x_star, double eps,
                          const std::vector<double>& eta_schedule, double tol);
Mask b_pair_mask(const PerturbationFamily& fam, std::size_t k, std::size_t y_star, std::size_t x_star,
                 double eps, double tol);
Mask b_union_mask(const PerturbationFamily& fam, std::size_t x_star, double eps, double tol);
Mask d_mask(const PerturbationFamily& fam, std::size_t x, double eps, double tol);
Mask c_mask(const PerturbationFamily& fam, std::size_t x, double eps, double tol);
Mask c_oracle_mask(const PerturbationFamily& fam, std::size_t x, double eps,
                   const std::vector<double>& eta_schedule, double tol);

/// (M^eps p)(x*) and the eps-subdifferential of p at x.
Mask mp_mask(const PerturbationFamily& fam, std::size_t x_star, double eps, double tol);
Mask subdiff_p_mask(const PerturbationFamily& fam, std::size_t x, double eps, double tol);

/// Throws ValidationError unless the schedule is nonempty, positive and strictly decreasing.
void validate_schedule(const std::vector<double>& eta_schedule);

}  // namespace detail
}  // namespace rdl
