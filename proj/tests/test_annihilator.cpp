#include <gtest/gtest.h>

#include "lgm/annihilator.hpp"
#include "lgm/corpus.hpp"
#include "lgm/errors.hpp"
#include "lgm/serialize.hpp"

using namespace lgm;

namespace {

IntegerSeries geometric(std::size_t order) { return IntegerSeries(std::vector<Integer>(order + 1, 1)); }

DifferentialOperator op(std::size_t order, std::size_t degree,
                        std::initializer_list<std::pair<std::pair<std::size_t, std::size_t>, long>> cs) {
  DifferentialOperator o;
  o.order = order;
  o.degree = degree;
  for (const auto& [k, v] : cs) o.coeffs[k] = v;
  return o;
}

bool vanishes(const std::vector<Rational>& v, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i <= to; ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

}  // namespace

TEST(Annihilator, ApplyBasicOperators) {
  const auto s = geometric(5);
  const auto d = apply_operator(op(1, 0, {{{0, 1}, 1}}), s);
  for (std::size_t i = 0; i <= 5; ++i) EXPECT_EQ(d[i], static_cast<long>(i));
  const IntegerSeries a(std::vector<Integer>{3, 5, 7, 11});
  const auto shifted = apply_operator(op(0, 1, {{{1, 0}, 1}}), a);
  EXPECT_EQ(shifted, (std::vector<Rational>{0, 3, 5, 7}));
  // (1 - t) D - t kills 1/(1-t)
  EXPECT_TRUE(vanishes(apply_operator(op(1, 1, {{{0, 1}, 1}, {{1, 1}, -1}, {{1, 0}, -1}}), geometric(20)), 0, 20));
}

TEST(Annihilator, GeometricSeriesHasUniqueFirstOrderOperator) {
  const auto basis = find_annihilator(geometric(10), 1, 1, 10);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], op(1, 1, {{{0, 1}, 1}, {{1, 0}, -1}, {{1, 1}, -1}}));
  EXPECT_EQ(render(basis[0]), "D - t - t*D");
}

TEST(Annihilator, ConstantSeriesKilledByD) {
  const IntegerSeries one(std::vector<Integer>{1, 0, 0, 0, 0, 0});
  const auto basis = find_annihilator(one, 1, 0, 5);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], op(1, 0, {{{0, 1}, 1}}));
}

TEST(Annihilator, EmptyBasisWhenBoundsTooSmall) {
  // 1/(1-t) needs t-degree 1.
  EXPECT_TRUE(find_annihilator(geometric(10), 3, 0, 10).empty());
}

TEST(Annihilator, BasisElementsAreCanonicalAndAnnihilate) {
  const auto s = constant_term_series(entry_polynomial(find_entry(builtin_corpus(), 13)), 30);
  const auto basis = find_annihilator(s, 3, 2, 30);
  ASSERT_FALSE(basis.empty());
  for (const auto& b : basis) {
    ASSERT_FALSE(b.coeffs.empty());
    EXPECT_EQ(b.coeffs.begin()->second, 1);
    EXPECT_TRUE(vanishes(apply_operator(b, s), 0, 30));
  }
}

TEST(Annihilator, NullspaceDimensionMonotoneInBounds) {
  const auto s = constant_term_series(entry_polynomial(find_entry(builtin_corpus(), 17)), 40);
  std::size_t prev_m = 0;
  for (std::size_t m = 0; m <= 4; ++m) {
    std::size_t prev_r = 0;
    for (std::size_t r = 0; r <= 5; ++r) {
      const std::size_t dim = find_annihilator(s, m, r, 40).size();
      EXPECT_GE(dim, prev_r) << m << "," << r;
      if (r == 5) {
        EXPECT_GE(dim, prev_m);
        prev_m = dim;
      }
      prev_r = dim;
    }
  }
}

TEST(Annihilator, ProjectiveSpaceOperatorHoldsOnHeldOutTerms) {
  const auto s = constant_term_series(entry_polynomial(find_entry(builtin_corpus(), 17)), 60);
  const auto basis = find_annihilator(s, 3, 4, 50);
  ASSERT_FALSE(basis.empty());
  for (const auto& b : basis) EXPECT_TRUE(vanishes(apply_operator(b, s), 51, 60));
}

TEST(Annihilator, SweepFindsMinimalCell) {
  const auto r = sweep_annihilators(geometric(20), 20);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->order, 1u);
  EXPECT_EQ(r->degree, 1u);
  const auto p3 = sweep_annihilators(constant_term_series(entry_polynomial(find_entry(builtin_corpus(), 17)), 40), 40);
  ASSERT_TRUE(p3.has_value());
  EXPECT_LE(p3->order + p3->degree, 7u);
}

TEST(Annihilator, TermsBeyondSeriesRejected) { EXPECT_THROW(find_annihilator(geometric(5), 1, 1, 6), InvalidArgument); }

TEST(Annihilator, CanonicalScalingAndRendering) {
  const auto c = canonical(op(2, 2, {{{0, 2}, -2}, {{2, 0}, 3}, {{1, 1}, 0}}));
  EXPECT_EQ(c.coeffs.size(), 2u);
  EXPECT_EQ(c.coefficient(0, 2), 1);
  EXPECT_EQ(c.coefficient(2, 0), Rational(-3, 2));
  EXPECT_EQ(render(c), "D^2 - 3/2*t^2");
  EXPECT_THROW(canonical(op(1, 1, {})), InvalidArgument);
}

TEST(Annihilator, JsonRoundTrip) {
  const auto c = canonical(op(2, 3, {{{0, 2}, 4}, {{3, 1}, -6}, {{1, 0}, 1}}));
  const Json j = to_json(c);
  EXPECT_EQ(j["coeffs"][0], Json::array({0, 2, "1"}));
  EXPECT_EQ(operator_from_json(j), c);
}
