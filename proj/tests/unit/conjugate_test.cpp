#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <random>

#include "rdl/conjugate.hpp"
#include "rdl/error.hpp"
#include "rdl/generate.hpp"

using rdl::ExtReal;
using rdl::PairedSpace;
using rdl::PointSet;
using rdl::Side;
using rdl::TabulatedFunction;

namespace {

std::shared_ptr<const PairedSpace> binary() {
  return std::make_shared<const PairedSpace>(
      PairedSpace({"0", "1"}, {"0", "1"}, {{0, 0}, {0, 1}}, "0", "0"));
}

TabulatedFunction on_binary(double a, double b) {
  return TabulatedFunction(binary(), Side::Primal, {ExtReal(a), ExtReal(b)});
}

TabulatedFunction random_function(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-3, 3);
  std::vector<std::vector<double>> prim{{0.0}}, dual{{0.0}};
  for (int i = 0; i < 5; ++i) {
    prim.push_back({double(coord(rng)), double(coord(rng))});
    dual.push_back({double(coord(rng)), double(coord(rng))});
  }
  prim[0] = {0.0, 0.0};
  dual[0] = {0.0, 0.0};
  // Drop duplicate coordinates so labels stay unique.
  auto dedup = [](std::vector<std::vector<double>> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  auto space = std::make_shared<const PairedSpace>(PairedSpace::from_coordinates(dedup(prim), dedup(dual)));
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  std::vector<ExtReal> vals;
  for (std::size_t i = 0; i < space->primal_size(); ++i)
    vals.push_back(i % 4 == 3 ? ExtReal::pos_inf() : ExtReal(val(rng)));
  return TabulatedFunction(space, Side::Primal, vals);
}

}  // namespace

TEST(Conjugate, IndicatorOfOriginIsZero) {
  auto s = std::make_shared<const PairedSpace>(
      PairedSpace({"0", "a"}, {"0", "b"}, {{0, 0}, {0, 5}}, "0", "0"));
  const TabulatedFunction h(s, Side::Primal, {ExtReal(0), ExtReal::pos_inf()});
  const auto hc = rdl::conjugate(h);
  EXPECT_EQ(hc.side(), Side::Dual);
  EXPECT_EQ(hc[0], ExtReal(0));
  EXPECT_EQ(hc[1], ExtReal(0));
}

TEST(Conjugate, IdentityOnBinaryGrid) {
  // f(x) = x on {0,1}: f*(0) = max(0, -1) = 0, f*(1) = max(0, 0) = 0.
  const auto hc = rdl::conjugate(on_binary(0, 1));
  EXPECT_EQ(hc.at("0"), ExtReal(0));
  EXPECT_EQ(hc.at("1"), ExtReal(0));
}

TEST(Conjugate, EmptyDomainGivesMinusInfinity) {
  auto s = binary();
  const TabulatedFunction h(s, Side::Primal, {ExtReal::pos_inf(), ExtReal::pos_inf()});
  const auto hc = rdl::conjugate(h);
  EXPECT_TRUE(hc[0].is_neg_inf());
  EXPECT_TRUE(hc[1].is_neg_inf());
  const auto hcc = rdl::biconjugate(h);
  EXPECT_TRUE(hcc[0].is_pos_inf());
  EXPECT_TRUE(hcc[1].is_pos_inf());
}

TEST(Conjugate, MinusInfinityAnywhereGivesPlusInfinity) {
  const TabulatedFunction h(binary(), Side::Primal, {ExtReal(3), ExtReal::neg_inf()}, rdl::Codomain::Extended);
  const auto hc = rdl::conjugate(h);
  EXPECT_TRUE(hc[0].is_pos_inf());
  EXPECT_TRUE(hc[1].is_pos_inf());
}

TEST(Conjugate, MaxOfTwoLinesBiconjugate) {
  // p = max(x, 1 - x) = 1 on {0,1}; p*(0) = -1, p*(1) = 0, p** = 1.
  const auto p = on_binary(1, 1);
  const auto pc = rdl::conjugate(p);
  EXPECT_EQ(pc.at("0"), ExtReal(-1));
  EXPECT_EQ(pc.at("1"), ExtReal(0));
  const auto pcc = rdl::biconjugate(p);
  EXPECT_EQ(pcc.at("0"), ExtReal(1));
  EXPECT_EQ(pcc.at("1"), ExtReal(1));
}

TEST(Conjugate, AffineOnGridIsBiconjugateClosed) {
  const auto h = on_binary(0, 1);  // <1, x>
  const auto hcc = rdl::biconjugate(h);
  EXPECT_EQ(hcc.values(), h.values());
}

TEST(EpsArgmin, Basics) {
  EXPECT_EQ(rdl::eps_argmin(on_binary(0, 0), 0.0), (PointSet{"0", "1"}));
  EXPECT_EQ(rdl::eps_argmin(on_binary(1, 0), 0.0), (PointSet{"1"}));
  const TabulatedFunction inf(binary(), Side::Primal, {ExtReal::pos_inf(), ExtReal::pos_inf()});
  EXPECT_TRUE(rdl::eps_argmin(inf, 1.0).empty());
  try {
    rdl::eps_argmin(on_binary(0, 0), -0.5);
    FAIL() << "negative eps accepted";
  } catch (const rdl::Error& e) {
    EXPECT_EQ(e.code(), rdl::ErrorCode::NegativeEpsilon);
  }
}

TEST(EpsSubdifferential, MaxOfTwoLines) {
  const auto p = on_binary(1, 1);
  EXPECT_EQ(rdl::eps_subdifferential(p, "1", 0.0), (PointSet{"0", "1"}));
  EXPECT_EQ(rdl::eps_subdifferential(p, "0", 0.0), (PointSet{"0"}));
  const TabulatedFunction h(binary(), Side::Primal, {ExtReal(0), ExtReal::pos_inf()});
  EXPECT_TRUE(rdl::eps_subdifferential(h, "1", 5.0).empty());
}

TEST(MEps, MaxOfTwoLines) {
  const auto p = on_binary(1, 1);
  EXPECT_EQ(rdl::m_eps(p, "1", 0.0), (PointSet{"1"}));
  EXPECT_EQ(rdl::m_eps(p, "0", 0.0), (PointSet{"0", "1"}));
}

TEST(ConjugateProperties, FenchelYoungAndInverseMapping) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_function(rng);
    const auto hc = rdl::conjugate(h);
    const auto& s = h.space();
    for (std::size_t z = 0; z < s.primal_size(); ++z) {
      if (!h[z].is_finite()) continue;
      for (std::size_t zs = 0; zs < s.dual_size(); ++zs)
        EXPECT_GE(hc[zs].value(), s.pair(zs, z) - h[z].value());
    }
    const auto hcc = rdl::biconjugate(h);
    for (std::size_t z = 0; z < s.primal_size(); ++z)
      EXPECT_TRUE(hcc[z] <= h[z] || rdl::approx_equal(hcc[z], h[z]));
    const auto h4 = rdl::biconjugate(hcc);
    for (std::size_t z = 0; z < s.primal_size(); ++z) EXPECT_TRUE(rdl::approx_equal(h4[z], hcc[z]));

    for (double eps : {0.0, 0.1, 1.0}) {
      for (std::size_t zs = 0; zs < s.dual_size(); ++zs) {
        const auto& zs_label = s.label(Side::Dual, zs);
        const auto m = rdl::m_eps(h, zs_label, eps);
        for (std::size_t z = 0; z < s.primal_size(); ++z) {
          const auto& z_label = s.label(Side::Primal, z);
          EXPECT_EQ(m.contains(z_label), rdl::eps_subdifferential(h, z_label, eps).contains(zs_label));
        }
      }
    }
  }
}

TEST(ConjugateProperties, Monotonicity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = random_function(rng);
    const auto& s = h.space();
    EXPECT_TRUE(rdl::eps_argmin(h, 0.1).subset_of(rdl::eps_argmin(h, 0.5)));
    for (std::size_t z = 0; z < s.primal_size(); ++z) {
      const auto& a = s.label(Side::Primal, z);
      EXPECT_TRUE(rdl::eps_subdifferential(h, a, 0.1).subset_of(rdl::eps_subdifferential(h, a, 0.5)));
    }
  }
}
