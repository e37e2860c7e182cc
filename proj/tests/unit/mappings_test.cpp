#include <gtest/gtest.h>

#include <set>
#include <string>

#include "oracle.hpp"
#include "rdl/conjugate.hpp"
#include "rdl/diagnostics.hpp"
#include "rdl/error.hpp"
#include "rdl/generate.hpp"
#include "rdl/mappings.hpp"

using rdl::PointSet;
using rdl::Side;

namespace {

std::set<std::string> as_set(const PointSet& s) { return {s.members().begin(), s.members().end()}; }

const std::vector<double> kFixedEps{0.0, 0.05, 0.3, 1.0, 2.5};

std::vector<double> test_eps(const rdl::PerturbationFamily& fam) {
  auto out = kFixedEps;
  for (double e : rdl::epsilon_grid(fam)) out.push_back(e);
  return out;
}

}  // namespace

TEST(Mappings, T1Values) {
  const auto fam = rdl::t1_family();
  EXPECT_EQ(rdl::s_eps(fam, "1", 0), (PointSet{"1"}));
  EXPECT_TRUE(rdl::s_eps(fam, "0", 0).empty());

  EXPECT_EQ(rdl::j_eps(fam, "u1", 0), (PointSet{"1"}));
  EXPECT_EQ(rdl::j_eps(fam, "u1", 1), (PointSet{"0", "1"}));

  EXPECT_EQ(rdl::i_eps(fam, "0", 0), (PointSet{"u2"}));
  EXPECT_EQ(rdl::i_eps(fam, "1", 0), (PointSet{"u1"}));
  EXPECT_EQ(rdl::i_eps(fam, "0", 1), (PointSet{"u1", "u2"}));

  EXPECT_EQ(rdl::a_pair(fam, "u1", "0", "1", {0, 0}), (PointSet{"1"}));
  EXPECT_EQ(rdl::a_script(fam, "1", 0), (PointSet{"1"}));
  EXPECT_TRUE(rdl::a_script(fam, "0", 0).empty());
  EXPECT_EQ(rdl::a_script_oracle(fam, "1", 0, {0.5}), (PointSet{"1"}));
  EXPECT_TRUE(rdl::a_script_oracle(fam, "0", 0, {0.5, 0.01}).empty());

  EXPECT_EQ(rdl::b_pair(fam, "u1", "0", "1", 0), (PointSet{"1"}));
  EXPECT_TRUE(rdl::b_pair(fam, "u2", "0", "1", 0).empty());
  EXPECT_EQ(rdl::b_union(fam, "1", 0), (PointSet{"1"}));
  EXPECT_TRUE(rdl::b_union(fam, "0", 0).empty());

  EXPECT_EQ(rdl::d_eps(fam, "1", 0), (PointSet{"1"}));
  EXPECT_TRUE(rdl::d_eps(fam, "0", 0).empty());
  EXPECT_EQ(rdl::c_eps(fam, "1", 0), (PointSet{"1"}));
  EXPECT_EQ(rdl::c_eps(fam, "0", 1), (PointSet{"0", "1"}));

  const auto m1 = rdl::exact_maps(fam, "1");
  EXPECT_EQ(m1.I, (PointSet{"u1"}));
  EXPECT_EQ(m1.D, (PointSet{"1"}));
  const auto m0 = rdl::exact_maps(fam, "0");
  EXPECT_EQ(m0.I, (PointSet{"u2"}));
  EXPECT_TRUE(m0.D.empty());
  EXPECT_EQ(m0.Mp.at("0"), (PointSet{"0", "1"}));
  EXPECT_EQ(m0.Mp.at("1"), (PointSet{"1"}));
}

TEST(Mappings, T1MatchesOracle) {
  const auto fam = rdl::t1_family();
  const auto raw = oracle::from_family(fam);
  EXPECT_EQ(as_set(rdl::s_eps(fam, "1", 0)), oracle::s_set(raw, 1, 0));
  EXPECT_EQ(as_set(rdl::a_script(fam, "1", 0)), oracle::a_script(raw, 1, 0, {1e-3}));
  EXPECT_EQ(as_set(rdl::d_eps(fam, "0", 1)), oracle::d_set(raw, 0, 1));
}

TEST(Mappings, ErrorsAreTyped) {
  const auto fam = rdl::t1_family();
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const rdl::Error& e) {
      return e.code();
    }
    return rdl::ErrorCode::InternalInconsistency;
  };
  EXPECT_EQ(code([&] { rdl::s_eps(fam, "1", -1); }), rdl::ErrorCode::NegativeEpsilon);
  EXPECT_EQ(code([&] { rdl::j_eps(fam, "u7", 0); }), rdl::ErrorCode::UnknownScenario);
  EXPECT_EQ(code([&] { rdl::i_eps(fam, "5", 0); }), rdl::ErrorCode::UnknownPoint);
  EXPECT_EQ(code([&] { rdl::a_pair(fam, "u1", "0", "1", {-1, 0}); }), rdl::ErrorCode::NegativeEpsilon);
  EXPECT_EQ(code([&] { rdl::a_script_oracle(fam, "1", 0, {0.1, 0.5}); }), rdl::ErrorCode::ValidationError);
  EXPECT_EQ(code([&] { rdl::a_script_oracle(fam, "1", 0, {}); }), rdl::ErrorCode::ValidationError);
}

TEST(Mappings, ScanSetsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto fam = rdl::random_family(seed);
    const auto raw = oracle::from_family(fam);
    for (double eps : test_eps(fam)) {
      for (std::size_t xs = 0; xs < fam.nx_star(); ++xs) {
        const auto& xl = fam.decision().label(Side::Dual, xs);
        ASSERT_EQ(as_set(rdl::s_eps(fam, xl, eps)), oracle::s_set(raw, xs, eps)) << seed << " eps " << eps;
        ASSERT_EQ(as_set(rdl::m_eps(fam.p(), xl, eps)), oracle::mp(raw, xs, eps)) << seed;
      }
      for (std::size_t x = 0; x < fam.nx(); ++x) {
        const auto& xl = fam.decision().label(Side::Primal, x);
        ASSERT_EQ(as_set(rdl::eps_subdifferential(fam.p(), xl, eps)), oracle::subdiff_p(raw, x, eps)) << seed;
        ASSERT_EQ(as_set(rdl::d_eps(fam, xl, eps)), oracle::d_set(raw, x, eps)) << seed << " eps " << eps;
      }
    }
  }
}

TEST(Mappings, ClosedFormAScriptMatchesLiteralOracle) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto fam = rdl::random_family(seed);
    const auto raw = oracle::from_family(fam);
    for (std::size_t xs = 0; xs < fam.nx_star(); ++xs) {
      const auto bps = rdl::breakpoints_at(fam, xs);
      for (double eps : rdl::epsilon_grid_at(fam, xs)) {
        const auto etas = rdl::eta_schedule_below(bps, eps);
        const auto& xl = fam.decision().label(Side::Dual, xs);
        ASSERT_EQ(as_set(rdl::a_script(fam, xl, eps)), oracle::a_script(raw, xs, eps, etas))
            << seed << " x* " << xl << " eps " << eps;
      }
    }
  }
}

TEST(Mappings, StructuralProperties) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto fam = rdl::random_family(seed);
    for (double eps : kFixedEps) {
      for (std::size_t xs = 0; xs < fam.nx_star(); ++xs) {
        const auto& xl = fam.decision().label(Side::Dual, xs);
        const auto s = rdl::s_eps(fam, xl, eps);
        ASSERT_EQ(rdl::a_script(fam, xl, eps), s) << seed;
        for (std::size_t k = 0; k < fam.scenario_count(); ++k) {
          const auto& u = fam.scenario(k).label;
          for (const auto& ys : fam.scenario(k).parameter->labels(Side::Dual)) {
            // A^(e1,e2) sits inside S^(e1+e2).
            ASSERT_TRUE(rdl::a_pair(fam, u, ys, xl, {eps / 3, 2 * eps / 3}).subset_of(s)) << seed;
            ASSERT_TRUE(rdl::b_pair(fam, u, ys, xl, eps).subset_of(rdl::b_union(fam, xl, eps)));
          }
        }
      }
      for (std::size_t x = 0; x < fam.nx(); ++x) {
        const auto& xl = fam.decision().label(Side::Primal, x);
        const auto d = rdl::d_eps(fam, xl, eps);
        // D is the inverse of B.
        for (const auto& xsl : fam.decision().labels(Side::Dual))
          ASSERT_EQ(d.contains(xsl), rdl::b_union(fam, xsl, eps).contains(xl)) << seed;
        ASSERT_EQ(rdl::c_eps(fam, xl, eps), d);
        ASSERT_TRUE(d.subset_of(rdl::c_eps_oracle(fam, xl, eps, {1, 0.1, 0.01})));
        // j and i are mutually inverse.
        for (std::size_t k = 0; k < fam.scenario_count(); ++k) {
          const auto& u = fam.scenario(k).label;
          ASSERT_EQ(rdl::j_eps(fam, u, eps).contains(xl), rdl::i_eps(fam, xl, eps).contains(u));
        }
        // D(x) in C(x) in the subdifferential of p.
        const auto m = rdl::exact_maps(fam, xl);
        ASSERT_TRUE(m.D.subset_of(m.C));
        ASSERT_TRUE(m.C.subset_of(rdl::eps_subdifferential(fam.p(), xl, 0.0))) << seed;
      }
    }
  }
}

TEST(Mappings, EtaScheduleOracleReachesClosedForm) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto fam = rdl::random_family(seed);
    for (std::size_t xs = 0; xs < fam.nx_star(); ++xs) {
      const auto& xl = fam.decision().label(Side::Dual, xs);
      for (double eps : rdl::epsilon_grid_at(fam, xs)) {
        const auto closed = rdl::a_script(fam, xl, eps);
        ASSERT_TRUE(closed.subset_of(rdl::a_script_oracle(fam, xl, eps, {1, 0.1, 0.001})));
        const auto etas = rdl::eta_schedule_below(rdl::breakpoints_at(fam, xs), eps);
        ASSERT_EQ(rdl::a_script_oracle(fam, xl, eps, etas), closed) << seed;
      }
    }
    for (std::size_t x = 0; x < fam.nx(); ++x) {
      const auto& xl = fam.decision().label(Side::Primal, x);
      const auto bps = rdl::breakpoints_for_x(fam, x);
      for (double eps : rdl::grid_from_breakpoints(bps)) {
        ASSERT_EQ(rdl::c_eps_oracle(fam, xl, eps, rdl::eta_schedule_below(bps, eps)), rdl::c_eps(fam, xl, eps))
            << seed;
      }
    }
  }
}
