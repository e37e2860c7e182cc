#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "rdl/diagnostics.hpp"
#include "rdl/error.hpp"
#include "rdl/generate.hpp"

using rdl::DualWitness;
using rdl::ExtReal;
using rdl::PairedSpace;

namespace {

PairedSpace binary() { return PairedSpace({"0", "1"}, {"0", "1"}, {{0, 0}, {0, 1}}, "0", "0"); }
PairedSpace trivial() { return PairedSpace({"0"}, {"0"}, {{0}}, "0", "0"); }

rdl::PerturbationFamily zero_family() {
  return rdl::PerturbationFamily(binary(), {{"u", trivial(), {{ExtReal(0)}, {ExtReal(0)}}}});
}

}  // namespace

TEST(Diagnose, T1PointVerdicts) {
  const auto fam = rdl::t1_family();
  const auto v0 = rdl::diagnose_point(fam, "0");
  EXPECT_EQ(v0.p_star, ExtReal(-1));
  EXPECT_EQ(v0.q_val, ExtReal(0));
  EXPECT_FALSE(v0.robust);
  EXPECT_FALSE(v0.strong);
  EXPECT_FALSE(v0.minmax);

  const auto v1 = rdl::diagnose_point(fam, "1");
  EXPECT_TRUE(v1.robust);
  EXPECT_TRUE(v1.strong);
  EXPECT_TRUE(v1.reverse_strong);
  EXPECT_TRUE(v1.minmax);
  ASSERT_TRUE(v1.dual_witness.has_value());
  EXPECT_EQ(*v1.dual_witness, (DualWitness{"u1", "0"}));
  EXPECT_EQ(v1.primal_witness, std::optional<std::string>("1"));
  for (const auto& [id, c] : v1.checks) EXPECT_TRUE(c.agrees()) << id;
}

TEST(Diagnose, T1TheoremChecks) {
  const auto fam = rdl::t1_family();
  const auto grid = rdl::epsilon_grid(fam);
  for (const auto* x : {"0", "1"}) {
    const bool expected = std::string(x) == "1";
    const auto r = rdl::check_theorem_robust(fam, x, grid);
    EXPECT_EQ(r.lhs, expected);
    EXPECT_EQ(r.rhs, expected);
    const auto s = rdl::check_theorem_strong(fam, x, grid);
    EXPECT_EQ(s.lhs, expected);
    EXPECT_EQ(s.rhs, expected);
    const auto rv = rdl::check_theorem_reverse(fam, x);
    EXPECT_EQ(rv.lhs, expected);
    EXPECT_EQ(rv.rhs, expected);
    const auto mm = rdl::check_theorem_minmax(fam, x);
    EXPECT_EQ(mm.lhs, expected);
    EXPECT_EQ(mm.rhs, expected);
    if (expected) {
      EXPECT_EQ(s.witness, std::optional<DualWitness>(DualWitness{"u1", "0"}));
      EXPECT_EQ(mm.witness, std::optional<DualWitness>(DualWitness{"u1", "0"}));
    }
  }
}

TEST(Diagnose, T1StableAndPointChecks) {
  const auto fam = rdl::t1_family();
  const auto st = rdl::check_stable(fam, rdl::epsilon_grid(fam));
  EXPECT_FALSE(st.stable_robust.lhs);
  EXPECT_FALSE(st.stable_robust.rhs);
  EXPECT_FALSE(st.stable_strong.lhs);
  EXPECT_FALSE(st.stable_strong.rhs);
  for (const auto* x : {"0", "1"}) {
    const auto sf = rdl::check_subdiff_formula(fam, x);
    EXPECT_FALSE(sf.i || sf.ii || sf.iii) << x;
    const auto b = rdl::check_brsc(fam, x);
    EXPECT_FALSE(b.i || b.ii || b.iii) << x;
  }
}

TEST(Diagnose, ConstantZeroFamilyIsStable) {
  const auto fam = zero_family();
  const auto st = rdl::check_stable(fam, rdl::epsilon_grid(fam));
  EXPECT_TRUE(st.stable_robust.lhs && st.stable_robust.rhs);
  EXPECT_TRUE(st.stable_strong.lhs && st.stable_strong.rhs);
  for (const auto* x : {"0", "1"}) {
    const auto b = rdl::check_brsc(fam, x);
    EXPECT_TRUE(b.i && b.ii && b.iii) << x;
  }
}

TEST(Diagnose, PreconditionErrors) {
  const rdl::PerturbationFamily empty(binary(), {{"u", trivial(), {{ExtReal::pos_inf()}, {ExtReal::pos_inf()}}}});
  try {
    rdl::check_theorem_robust(empty, "0", {0.0});
    FAIL();
  } catch (const rdl::Error& e) {
    EXPECT_EQ(e.code(), rdl::ErrorCode::EmptyDomain);
  }
  rdl::DiagnoseOptions no_checks;
  no_checks.theorem_checks = false;
  EXPECT_NO_THROW(rdl::diagnose_point(empty, "0", no_checks));
  EXPECT_THROW(rdl::diagnose_point(empty, "0"), rdl::Error);

  // p(1) = +inf, so subdifferential checks at 1 are undefined.
  const rdl::PerturbationFamily partial(binary(), {{"u", trivial(), {{ExtReal(0)}, {ExtReal::pos_inf()}}}});
  try {
    rdl::check_brsc(partial, "1");
    FAIL();
  } catch (const rdl::Error& e) {
    EXPECT_EQ(e.code(), rdl::ErrorCode::NonFinitePoint);
  }
}

TEST(Diagnose, NoPrimalAttainment) {
  // On a finite grid Mp(x*) is empty only when dom p is.
  const rdl::PerturbationFamily empty(binary(), {{"u", trivial(), {{ExtReal::pos_inf()}, {ExtReal::pos_inf()}}}});
  try {
    rdl::check_theorem_reverse(empty, "1");
    FAIL();
  } catch (const rdl::Error& e) {
    EXPECT_EQ(e.code(), rdl::ErrorCode::NoPrimalAttainment);
  }
}

TEST(Diagnose, VerdictLatticeAndAgreementOnRandomFamilies) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto fam = rdl::random_family(seed);
    const auto raw = oracle::from_family(fam);
    rdl::DualityReport rep;
    ASSERT_NO_THROW(rep = rdl::diagnose(fam)) << seed;
    for (std::size_t xs = 0; xs < rep.verdicts.size(); ++xs) {
      const auto& v = rep.verdicts[xs];
      const double ps = oracle::p_star(raw, xs), qv = oracle::q(raw, xs);
      EXPECT_EQ(v.robust, ps == qv || std::abs(ps - qv) <= 1e-9) << seed;
      if (v.minmax) EXPECT_TRUE(v.strong && v.reverse_strong);
      if (v.strong || v.reverse_strong) EXPECT_TRUE(v.robust);
      for (const auto& [id, c] : v.checks) EXPECT_TRUE(c.agrees()) << seed << " " << id;
    }
    EXPECT_TRUE(rep.stable_robust.agrees());
    EXPECT_TRUE(rep.stable_strong.agrees());
    for (const auto& pc : rep.point_checks) {
      EXPECT_TRUE(pc.subdifferential_formula.agrees());
      EXPECT_TRUE(pc.brsc.agrees());
    }
  }
}

TEST(EpsilonGrid, StraddlesBreakpoints) {
  const auto grid = rdl::grid_from_breakpoints({0.5, 0.5 + 1e-12, 2.0});
  const std::vector<double> expected{0.0, 0.5 - 1e-8, 0.5, 0.5 + 1e-8, 2.0 - 1e-8, 2.0, 2.0 + 1e-8, 3.0};
  ASSERT_EQ(grid.size(), expected.size());
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(grid[i], expected[i], 1e-12);
}

TEST(EpsilonGrid, EtaScheduleEndsBelowNextBreakpoint) {
  const auto etas = rdl::eta_schedule_below({0.25, 1.0}, 0.1);
  ASSERT_FALSE(etas.empty());
  for (std::size_t i = 1; i < etas.size(); ++i) EXPECT_LT(etas[i], etas[i - 1]);
  EXPECT_LT(0.1 + etas.back(), 0.25);
  EXPECT_GT(etas.back(), 0.0);
}

TEST(Diagnose, ValuesAgree) {
  EXPECT_TRUE(rdl::values_agree(ExtReal(1), ExtReal(1 + 1e-12)));
  EXPECT_TRUE(rdl::values_agree(ExtReal::pos_inf(), ExtReal::pos_inf()));
  EXPECT_TRUE(rdl::values_agree(ExtReal::neg_inf(), ExtReal::neg_inf()));
  EXPECT_FALSE(rdl::values_agree(ExtReal(-1), ExtReal(0)));
}
