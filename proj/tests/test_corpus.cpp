#include <gtest/gtest.h>

#include "lgm/corpus.hpp"
#include "lgm/errors.hpp"
#include "lgm/expr.hpp"
#include "lgm/serialize.hpp"
#include "oracle.hpp"

using namespace lgm;

namespace {

Json builtin_document() {
  Json entries = Json::array();
  for (const auto& e : builtin_corpus()) entries.push_back(to_json(e));
  return Json{{"entries", entries}};
}

std::string schema_error(const Json& doc) {
  try {
    parse_corpus(doc.dump());
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Corpus, BuiltinHasSeventeenEntriesInOrder) {
  const auto& c = builtin_corpus();
  ASSERT_EQ(c.size(), 17u);
  for (int i = 0; i < 17; ++i) EXPECT_EQ(c[static_cast<std::size_t>(i)].id, i + 1);
}

TEST(Corpus, StoredPolynomials) {
  const auto& c = builtin_corpus();
  EXPECT_EQ(find_entry(c, 7).polynomial, "(x+y+z+1)^2/x + (x+y+z+1)*(y+z+1)*(z+1)^2/(x*y*z)");
  const auto v22 = entry_polynomial(find_entry(c, 10));
  EXPECT_EQ(v22.size(), 14u);
  EXPECT_EQ(v22.constant_term(), 4);
  EXPECT_EQ(find_entry(c, 11).alternates, (std::vector<std::string>{"(x^2+y^2+z^2+1)^3/(x*y*z)"}));
  EXPECT_NE(find_entry(c, 8).description.find("misprint"), std::string::npos);
}

TEST(Corpus, DegreesAreFullyMultiplied) {
  const std::vector<long> factor{2, 4, 6, 8, 10, 12, 14, 16, 18, 22, 1, 2, 3, 4, 5, 2, 1};
  for (const auto& e : builtin_corpus()) {
    const long idx = e.fano_index;
    const long printed = factor[static_cast<std::size_t>(e.id - 1)];
    const long expect = e.id <= 10 ? printed : idx * idx * idx * printed;
    EXPECT_EQ(e.degree, expect) << "entry " << e.id;
  }
}

TEST(Corpus, AllEntriesParseInThreeVariablesWithInteriorOrigin) {
  for (const auto& e : builtin_corpus()) {
    const auto f = entry_polynomial(e);
    EXPECT_EQ(f.nvars(), 3u);
    EXPECT_TRUE(contains_origin_interior(newton_polytope(f))) << "entry " << e.id;
  }
}

TEST(Corpus, ReferenceProvenance) {
  for (const auto& e : builtin_corpus()) {
    ASSERT_TRUE(e.reference_series.has_value()) << e.id;
    EXPECT_EQ(e.reference_series->coeffs[0], 1);
    EXPECT_EQ(e.reference_series->provenance, e.id == 7 ? "published" : "derived") << e.id;
  }
}

TEST(Corpus, V14Verification) {
  const auto r = verify_entry(find_entry(builtin_corpus(), 7), 6);
  EXPECT_TRUE(r.passed());
  const std::vector<long> expect{1, 4, 48, 760, 13840, 273504, 5703096};
  for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(r.series[i], expect[i]);
  ASSERT_TRUE(r.reference.has_value());
  EXPECT_TRUE(r.reference->match);
  EXPECT_EQ(r.reference->compared_upto, 6u);
}

TEST(Corpus, V1AlternatesAgree) {
  const auto r = verify_entry(find_entry(builtin_corpus(), 11), 12);
  ASSERT_EQ(r.alternates.size(), 1u);
  EXPECT_TRUE(r.alternates[0].match.match);
  // ct(f^2) from the cross term 2 z (x+y+1)^6/(x y^2 z): twice the x y^2 coefficient
  EXPECT_EQ(r.series[2], 2 * oracle::multinomial({1, 2, 3}));
  // for the alternate: the x^2 y^2 z^2 coefficient of (x^2+y^2+z^2+1)^6
  EXPECT_EQ(r.alternates[0].series[2], oracle::multinomial({1, 1, 1, 3}));
  EXPECT_EQ(r.series[2], 120);
}

TEST(Corpus, VerifyAllPasses) {
  const auto reports = verify_all(builtin_corpus(), 8);
  ASSERT_EQ(reports.size(), 17u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << "entry " << r.id;
    if (find_entry(builtin_corpus(), r.id).ci) {
      ASSERT_TRUE(r.closed_form.has_value());
      EXPECT_TRUE(r.closed_form->match) << "entry " << r.id;
    }
  }
}

TEST(Corpus, VerificationIsDeterministic) {
  const auto& e = find_entry(builtin_corpus(), 5);
  EXPECT_EQ(to_json(verify_entry(e, 8)).dump(), to_json(verify_entry(e, 8)).dump());
  EXPECT_THROW(verify_entry(e, 5), InvalidArgument);
}

TEST(Corpus, TamperedReferenceReportsIndex) {
  Json doc = builtin_document();
  doc["entries"][6]["reference_series"]["coeffs"][3] = "761";
  const auto corpus = parse_corpus(doc.dump());
  const auto r = verify_entry(find_entry(corpus, 7), 6);
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.reference.has_value());
  EXPECT_FALSE(r.reference->match);
  EXPECT_EQ(r.reference->index, 3u);
}

TEST(Corpus, ConstantShiftIsToleratedAndFlagged) {
  Json doc = builtin_document();
  doc["entries"][16]["polynomial"] = "x + y + z + 1/(x*y*z) + 3";
  const auto corpus = parse_corpus(doc.dump());
  const auto r = verify_entry(find_entry(corpus, 17), 12);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.reference->up_to_shift);
  EXPECT_TRUE(r.closed_form->up_to_shift);
  EXPECT_EQ(r.series[1], 3);
  const auto exact = verify_entry(find_entry(builtin_corpus(), 17), 12);
  EXPECT_FALSE(exact.reference->up_to_shift);
}

TEST(Corpus, SerializationRoundTrip) {
  const auto again = parse_corpus(builtin_document().dump());
  ASSERT_EQ(again.size(), 17u);
  for (std::size_t i = 0; i < again.size(); ++i) EXPECT_EQ(to_json(again[i]), to_json(builtin_corpus()[i]));
}

TEST(Corpus, SchemaErrorsNameEntryAndField) {
  Json missing = builtin_document();
  missing["entries"].erase(4);
  EXPECT_NE(schema_error(missing).find("entry 5"), std::string::npos) << schema_error(missing);

  Json dup = builtin_document();
  dup["entries"][1]["id"] = 1;
  EXPECT_NE(schema_error(dup).find("entry 1"), std::string::npos);

  Json bad_poly = builtin_document();
  bad_poly["entries"][2]["polynomial"] = "(x+1)/(y+1)";
  const std::string m = schema_error(bad_poly);
  EXPECT_NE(m.find("entry 3"), std::string::npos) << m;
  EXPECT_NE(m.find("polynomial"), std::string::npos) << m;

  Json no_degree = builtin_document();
  no_degree["entries"][8].erase("degree");
  EXPECT_NE(schema_error(no_degree).find("entry 9: field 'degree'"), std::string::npos);

  Json bad_ref = builtin_document();
  bad_ref["entries"][0]["reference_series"]["coeffs"][0] = "2";
  EXPECT_NE(schema_error(bad_ref).find("reference_series.coeffs"), std::string::npos);

  Json bad_prov = builtin_document();
  bad_prov["entries"][0]["reference_series"]["provenance"] = "guess";
  EXPECT_NE(schema_error(bad_prov).find("provenance"), std::string::npos);

  Json no_id = builtin_document();
  no_id["entries"][3].erase("id");
  EXPECT_NE(schema_error(no_id).find("'id'"), std::string::npos);

  EXPECT_NE(schema_error(Json{{"rows", 1}}).find("entries"), std::string::npos);
  EXPECT_THROW(parse_corpus("{not json"), SchemaError);
}

TEST(Corpus, MissingFileIsIoError) { EXPECT_THROW(load_corpus("/nonexistent/corpus.json"), IoError); }
