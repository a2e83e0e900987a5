#include <gtest/gtest.h>

#include "k3dw/json_io.hpp"
#include "k3dw/sampling.hpp"
#include "test_support.hpp"

namespace k3dw {
namespace {

using json_io::json;
using testing::unit;

TEST(JsonIo, RationalParsingCanonicalizes) {
  EXPECT_EQ(json_io::rational_from_string("4/2"), 2);
  EXPECT_EQ(json_io::rational_from_string("4/2").get_den(), 1);
  EXPECT_EQ(json_io::rational_from_string("3/-6"), mpq_class(-1, 2));
  EXPECT_EQ(json_io::rational_from_string("-7"), -7);
  EXPECT_EQ(json_io::to_string(json_io::rational_from_string("6/4")), "3/2");
  EXPECT_EQ(json_io::to_string(json_io::rational_from_string("10/5")), "2");
  EXPECT_EQ(json_io::rational_from(json(5)), 5);
}

TEST(JsonIo, MalformedRationalsRejected) {
  for (const char* bad : {"1/0", "abc", "1/", "/3", "", "1.5"}) {
    EXPECT_THROW(json_io::rational_from_string(bad), Error) << bad;
  }
  EXPECT_THROW(json_io::rational_from(json(1.5)), Error);
  EXPECT_THROW(json_io::integer_from(json("12x")), Error);
}

TEST(JsonIo, BigIntegersSurvive) {
  const mpz_class big("123456789012345678901234567890");
  const json j = json_io::to_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(json_io::integer_from(j), big);
  EXPECT_TRUE(json_io::to_json(mpz_class(-5)).is_number_integer());
}

TEST(JsonIo, RelativeClassFields) {
  const json good = json::parse(R"({"schema": "k3dw/1",
    "representative": [0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],
    "L": [1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]})");
  const RelativeClass g = json_io::relative_class_from(good);
  EXPECT_EQ(g.representative(), unit(3));
  EXPECT_EQ(g.l(), unit(1));

  json extra = good;
  extra["colour"] = "red";
  EXPECT_THROW(json_io::relative_class_from(extra), Error);
  json wrong_schema = good;
  wrong_schema["schema"] = "k3dw/2";
  EXPECT_THROW(json_io::relative_class_from(wrong_schema), Error);
  json missing = good;
  missing.erase("L");
  EXPECT_THROW(json_io::relative_class_from(missing), Error);
  json short_vector = good;
  short_vector["representative"].erase(0);
  EXPECT_THROW(json_io::relative_class_from(short_vector), Error);
  json bad_boundary = good;
  bad_boundary["L"] = json_io::to_json(unit(17));
  EXPECT_THROW(json_io::relative_class_from(bad_boundary), Error);
}

TEST(JsonIo, RoundTrips) {
  Sampler sampler(51);
  for (int n = 0; n < 50; ++n) {
    const LatticeVector v = sampler.vector(1000);
    EXPECT_EQ(json_io::lattice_vector_from(json::parse(json_io::to_json(v).dump())), v);
    const RationalVector q = sampler.rational_vector(50, 12);
    EXPECT_EQ(json_io::rational_vector_from(json::parse(json_io::to_json(q).dump())), q);
    const BoundaryClass b = sampler.boundary();
    const RelativeClass g = sampler.relative_class(b, 1 + n % 3);
    EXPECT_TRUE(json_io::relative_class_from(json_io::to_json(g)) == g);
    const UnitAngle a = sampler.angle();
    const UnitAngle back = json_io::angle_from(json_io::to_json(a));
    EXPECT_EQ(back.c(), a.c());
    EXPECT_EQ(back.s(), a.s());
  }
}

TEST(JsonIo, PeriodAndKahlerForms) {
  const PeriodPoint s{to_rational(unit(17) + unit(18)), to_rational(unit(19) + unit(20)), BoundaryClass(unit(1))};
  const PeriodPoint back = json_io::period_from(json_io::to_json(s));
  EXPECT_EQ(back.re, s.re);
  EXPECT_EQ(back.im, s.im);
  EXPECT_TRUE(back.boundary == s.boundary);

  const json coords = json_io::to_json(to_rational(unit(17) + unit(18)));
  EXPECT_EQ(json_io::kahler_coords_from(coords), json_io::kahler_coords_from(json{{"coords", coords}}));
  EXPECT_THROW(json_io::kahler_coords_from(json{{"coords", coords}, {"extra", 1}}), Error);
}

TEST(JsonIo, WallRecordKeys) {
  const auto walls = valid_hyperplanes(RelativeClass(2 * unit(3), BoundaryClass(unit(1))));
  const json j = json_io::to_json(walls.at(0));
  EXPECT_EQ(j["k"], 0);
  EXPECT_EQ(j["pairing_with_L"], 2);
  EXPECT_EQ(j["closed_invariant"], "1/8");
  EXPECT_EQ(json_io::lattice_vector_from(j["lifting"]), 2 * unit(3));
}

}  // namespace
}  // namespace k3dw
