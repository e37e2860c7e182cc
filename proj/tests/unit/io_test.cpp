#include <gtest/gtest.h>

#include <string>

#include "rdl/diagnostics.hpp"
#include "rdl/error.hpp"
#include "rdl/generate.hpp"
#include "rdl/io.hpp"

namespace io = rdl::io;
using rdl::ExtReal;

namespace {

std::string parse_error_message(const std::string& text) {
  try {
    io::parse(text, "t.json");
  } catch (const rdl::Error& e) {
    EXPECT_EQ(e.code(), rdl::ErrorCode::ParseError);
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, ExtendedRealsUseStringInfinities) {
  EXPECT_EQ(io::ext_to_json(ExtReal::pos_inf()), "+inf");
  EXPECT_EQ(io::ext_to_json(ExtReal::neg_inf()), "-inf");
  EXPECT_EQ(io::ext_to_json(ExtReal(2.5)), 2.5);
  EXPECT_TRUE(io::ext_from_json("inf").is_pos_inf());
  EXPECT_TRUE(io::ext_from_json("-inf").is_neg_inf());
  EXPECT_THROW(io::ext_from_json("nan"), rdl::Error);
  EXPECT_THROW(io::ext_from_json(true), rdl::Error);
}

TEST(Io, MalformedJsonReportsLineAndColumn) {
  const auto msg = parse_error_message("{\n  \"a\": [1, 2,,]\n}");
  EXPECT_NE(msg.find("t.json:2:"), std::string::npos) << msg;
}

TEST(Io, FamilyRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto fam = rdl::random_family(seed);
    const auto j = io::family_to_json(fam);
    const auto back = io::family_from_json(io::parse(j.dump()));
    EXPECT_EQ(io::family_to_json(back), j);
    EXPECT_EQ(back.q().values(), fam.q().values());
  }
}

TEST(Io, ShapeErrorsAreParseErrors) {
  try {
    io::family_from_json(io::parse(R"({"decision": {"primal": ["0"]}})"));
    FAIL();
  } catch (const rdl::Error& e) {
    EXPECT_EQ(e.code(), rdl::ErrorCode::ParseError);
  }
  try {
    io::lsip_from_json(io::parse(R"({"n": 1, "c": [1], "rows": [{"t": "a", "a": ["x"], "b": 0}]})"));
    FAIL();
  } catch (const rdl::Error& e) {
    EXPECT_EQ(e.code(), rdl::ErrorCode::ParseError);
  }
}

TEST(Io, MissingZeroIsValidationLevel) {
  const auto j = io::parse(R"({"decision": {"primal": ["a"], "dual": ["0"], "pairing": [[0]]},
                               "scenarios": [{"u": "u", "parameter": {"primal": ["0"], "dual": ["0"], "pairing": [[0]]},
                                              "F": [[0]]}]})");
  try {
    io::family_from_json(j);
    FAIL();
  } catch (const rdl::Error& e) {
    EXPECT_EQ(e.code(), rdl::ErrorCode::MissingZeroShift);
  }
}

TEST(Io, LsipAndConicRoundTrip) {
  const auto poly = rdl::lsip_polygon(16);
  const auto pj = io::lsip_to_json(poly);
  EXPECT_EQ(io::lsip_to_json(io::lsip_from_json(pj)), pj);
  const auto demo = rdl::conic_demo();
  const auto cj = io::conic_to_json(demo);
  EXPECT_EQ(io::conic_to_json(io::conic_from_json(cj)), cj);
  const auto sched = io::schedule_from_json(io::parse(R"([["t0"], ["t0", "t1"]])"));
  ASSERT_EQ(sched.size(), 2u);
  EXPECT_EQ(sched[1][1], "t1");
}

TEST(Io, ReportShape) {
  const auto fam = rdl::t1_family();
  const auto j = io::report_to_json(fam, rdl::diagnose(fam));
  ASSERT_EQ(j.at("verdicts").size(), 2u);
  const auto& v0 = j.at("verdicts")[0];
  EXPECT_EQ(v0.at("x_star"), "0");
  EXPECT_EQ(v0.at("robust"), false);
  EXPECT_EQ(v0.at("p_star"), -1.0);
  const auto& v1 = j.at("verdicts")[1];
  EXPECT_EQ(v1.at("minmax"), true);
  EXPECT_EQ(v1.at("dual_witness").at("u"), "u1");
  EXPECT_EQ(v1.at("primal_witness"), "1");
  EXPECT_TRUE(j.at("stable").is_object());
  EXPECT_EQ(j.at("p").at("0"), 1.0);
}
