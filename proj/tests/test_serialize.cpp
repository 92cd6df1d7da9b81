#include <gtest/gtest.h>

#include "lgm/errors.hpp"
#include "lgm/serialize.hpp"

using namespace lgm;

TEST(Serialize, SeriesAsDecimalStrings) {
  const IntegerSeries s(std::vector<Integer>{Integer(1), Integer("123456789012345678901234567890")});
  const Json j = to_json(s);
  EXPECT_EQ(j.dump(), R"(["1","123456789012345678901234567890"])");
  EXPECT_EQ(series_from_json(j), s);
  EXPECT_EQ(series_from_json(Json::array({1, 2, "3"})).coeffs(), (std::vector<Integer>{1, 2, 3}));
  EXPECT_THROW(series_from_json(Json::array({"1x"})), SchemaError);
}

TEST(Serialize, ModelRoundTrip) {
  const auto m = grassmannian_hyperplane_system(2, 6, 5);
  const Json j = to_json(m);
  const auto back = model_from_json(j);
  EXPECT_EQ(back.variables, m.variables);
  ASSERT_EQ(back.constraints.size(), m.constraints.size());
  for (std::size_t i = 0; i < m.constraints.size(); ++i) EXPECT_EQ(back.constraints[i], m.constraints[i]);
  EXPECT_EQ(back.potential, m.potential);
  EXPECT_EQ(to_json(back), j);
}

TEST(Serialize, ModelSchemaErrors) {
  EXPECT_THROW(model_from_json(Json{{"variables", Json::array({"a"})}}), SchemaError);
  EXPECT_THROW(model_from_json(Json{{"variables", "a"}, {"constraints", Json::array()}, {"potential", "a"}}),
               SchemaError);
  EXPECT_THROW(model_from_json(Json{{"variables", Json::array({"a"})}, {"constraints", Json::array()}, {"potential", "b"}}),
               InvalidArgument);
}

TEST(Serialize, PolytopeUsesRationalStrings) {
  const Polytope p = Polytope::hull(1, {RationalVector{Rational(-1, 2)}, RationalVector{Rational(3)}});
  const Json j = to_json(p);
  EXPECT_EQ(j["vertices"], Json::parse(R"([["-1/2"],["3"]])"));
  EXPECT_EQ(j["lattice"], false);
  EXPECT_EQ(j["facets"].size(), 2u);
}

TEST(Serialize, MatchReportFields) {
  MatchReport m;
  m.match = false;
  m.compared_upto = 6;
  m.index = 3;
  m.lhs = 760;
  m.rhs = 761;
  EXPECT_EQ(to_json(m).dump(), R"({"match":false,"compared_upto":6,"up_to_shift":false,"index":3,"lhs":"760","rhs":"761"})");
}
