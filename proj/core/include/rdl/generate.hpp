#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdl/conic.hpp"
#include "rdl/family.hpp"
#include "rdl/lsip.hpp"

namespace rdl {

inline constexpr std::size_t kMaxPoints = 64;
inline constexpr std::size_t kMaxScenarios = 16;
inline constexpr std::size_t kMaxParameters = 16;
inline constexpr std::size_t kMaxRows = 10000;

enum class FamilyShape {
  Any,             ///< Plain or Dominant, chosen by the seed
  Plain,           ///< independent random tables
  Dominant,        ///< one scenario dominates at y = 0 and is expensive off 0, so q = p* everywhere
  SingleScenario,  ///< |U| = 1
  ConstantInY,     ///< F_u(x, y) = f_u(x)
};

/// Zero sizes are drawn from the seed: |X|, |X*| in [2, 8], |U| in [1, 4],
/// |Y_u|, |Y_u*| in [1, 4].
struct FamilyGenOptions {
  std::size_t nx = 0;
  std::size_t nx_star = 0;
  std::size_t nu = 0;
  std::size_t ny = 0;
  FamilyShape shape = FamilyShape::Any;
  double inf_rate = 0.1;
};

/// Random family on integer coordinate grids with dot-product pairings.
/// Finite values are uniform on [-5, 5]; dom p is never empty. Throws SizeCap.
PerturbationFamily random_family(std::uint64_t seed, const FamilyGenOptions& opts = {});

/// X = X* = {0, 1}, U = {u1, u2}, Y_u = {0}, F_u1(x, 0) = x, F_u2(x, 0) = 1 - x.
PerturbationFamily t1_family();

/// Tangent cuts x1 cos(theta_k) + x2 sin(theta_k) <= 1, theta_k = 2 pi k / N,
/// minimizing x1 + x2. For N a power of two the rows come in bit-reversed
/// order, so every prefix of length 2^j is a regular 2^j-gon.
LinearSipInstance lsip_polygon(std::size_t cuts);

/// Nested schedule of row prefixes with the given lengths.
std::vector<std::vector<std::string>> prefix_schedule(const LinearSipInstance& inst,
                                                      const std::vector<std::size_t>& sizes);

/// Random feasible, bounded LSIP with n in [1, 4] and |T| <= 200 unless given.
LinearSipInstance random_lsip(std::uint64_t seed, std::size_t n = 0, std::size_t rows = 0);

/// X = {-1, 0, 1}, f(x) = x, one constraint -x <= 0, multipliers {0, 0.5, 1, 2}.
ConicUncertainInstance conic_demo();

/// Random one-dimensional conic instance with up to three scenarios.
ConicUncertainInstance random_conic(std::uint64_t seed);

}  // namespace rdl
