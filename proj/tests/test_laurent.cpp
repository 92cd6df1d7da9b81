#include <gtest/gtest.h>

#include <random>

#include "lgm/errors.hpp"
#include "lgm/expr.hpp"
#include "lgm/laurent.hpp"
#include "oracle.hpp"

using namespace lgm;

namespace {

LaurentPolynomial poly(const std::string& text, std::vector<std::string> vars = {"x", "y", "z"}) {
  return to_laurent(parse(text), vars);
}

LaurentPolynomial random_poly(std::mt19937_64& rng, std::size_t n, int terms, int span) {
  std::uniform_int_distribution<int> e(-span, span), c(-5, 5);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Exponent ex(n);
    for (auto& k : ex) k = e(rng);
    ts.push_back({ex, c(rng)});
  }
  return LaurentPolynomial(n, ts);
}

}  // namespace

TEST(Laurent, CanonicalFormMergesAndDropsZeros) {
  LaurentPolynomial f(2, {{{1, 0}, 2}, {{0, 1}, 3}, {{1, 0}, -2}, {{0, 0}, 0}});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.coefficient({0, 1}), 3);
  EXPECT_EQ(f.coefficient({1, 0}), 0);
  EXPECT_TRUE(LaurentPolynomial(2, {{{1, 1}, 0}}).is_zero());
}

TEST(Laurent, TermsSortedLexicographically) {
  const auto f = poly("z + 1/x + y + 5");
  std::vector<Exponent> seen;
  for (const auto& t : f.terms()) seen.push_back(t.exponent);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(f.constant_term(), 5);
}

TEST(Laurent, WrongExponentLengthRejected) {
  EXPECT_THROW(LaurentPolynomial(2, {{{1, 0, 0}, 1}}), InvalidArgument);
  EXPECT_THROW(add(LaurentPolynomial::variable(2, 0), LaurentPolynomial::variable(3, 0)), InvalidArgument);
  EXPECT_THROW(multiply(LaurentPolynomial::variable(2, 0), LaurentPolynomial::variable(3, 0)), InvalidArgument);
}

TEST(Laurent, ArithmeticIdentities) {
  const auto f = poly("x + 1/x");
  const auto sq = multiply(f, f);
  EXPECT_EQ(sq, poly("x^2 + 2 + x^-2"));
  EXPECT_EQ(subtract(f, f), LaurentPolynomial(3));
  EXPECT_EQ(add(f, negate(f)), LaurentPolynomial(3));
  EXPECT_EQ(scale(f, 3), poly("3*x + 3/x"));
  EXPECT_TRUE(scale(f, 0).is_zero());
}

TEST(Laurent, CentralBinomialConstantTerms) {
  const auto f = poly("x + 1/x", {"x"});
  for (unsigned k = 0; k <= 10; ++k) {
    EXPECT_EQ(power(f, 2 * k).constant_term(), oracle::binomial(2 * k, k)) << "k=" << k;
    EXPECT_EQ(power(f, 2 * k + 1).constant_term(), 0);
  }
}

TEST(Laurent, MultiplyMatchesNaiveOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_poly(rng, 3, 8, 3);
    const auto g = random_poly(rng, 3, 8, 3);
    EXPECT_EQ(oracle::from(multiply(f, g)), oracle::mul(oracle::from(f), oracle::from(g)));
  }
}

TEST(Laurent, MultiplyHandlesHugeExponents) {
  const auto a = LaurentPolynomial::monomial({4'000'000'000'000LL, -3}, 2);
  const auto b = LaurentPolynomial::monomial({-4'000'000'000'000LL, 5}, 3);
  const auto c = add(a, LaurentPolynomial::constant(2, 1));
  EXPECT_EQ(multiply(a, b), LaurentPolynomial::monomial({0, 2}, 6));
  EXPECT_EQ(oracle::from(multiply(c, c)), oracle::mul(oracle::from(c), oracle::from(c)));
}

TEST(Laurent, PowerEqualsRepeatedMultiply) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_poly(rng, 3, 5, 2);
    LaurentPolynomial acc = LaurentPolynomial::constant(3, 1);
    for (unsigned d = 0; d <= 6; ++d) {
      EXPECT_EQ(power(f, d), acc) << "d=" << d;
      acc = multiply(acc, f);
    }
  }
}

TEST(Laurent, FilteredMultiplyKeepsOnlySelected) {
  const auto f = poly("x + y + 1/x");
  const auto full = multiply(f, f);
  const auto kept = multiply_filtered(f, f, [](std::span<const std::int64_t> e) { return e[0] >= 0; });
  for (const auto& t : full.terms()) {
    EXPECT_EQ(kept.coefficient(t.exponent), t.exponent[0] >= 0 ? t.coeff : Integer(0));
  }
}

TEST(Laurent, DeterminantAndUnimodularity) {
  EXPECT_EQ(determinant({{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), -1);
  EXPECT_EQ(determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_THROW(substitute_monomial(poly("x+y+z"), {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), InvalidArgument);
  EXPECT_THROW(substitute_monomial(poly("x+y+z"), {{1, 0}, {0, 1}}), InvalidArgument);
}

TEST(Laurent, MonomialSubstitutionPreservesConstantTermOfPowers) {
  std::mt19937_64 rng(3);
  const auto f = poly("(x+y+z+1)^2/x + (x+y+z+1)*(y+z+1)*(z+1)^2/(x*y*z)");
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = oracle::random_unimodular(3, rng);
    const auto g = substitute_monomial(f, m);
    EXPECT_EQ(g.size(), f.size());
    for (unsigned d = 0; d <= 4; ++d) EXPECT_EQ(power(g, d).constant_term(), power(f, d).constant_term());
  }
}

TEST(Laurent, SubstitutionIsRingHomomorphism) {
  const IntMatrix m{{1, 1, 0}, {0, 1, 0}, {0, 2, 1}};
  const auto f = poly("x + 1/y + 2*z");
  const auto g = poly("x*y - 3");
  EXPECT_EQ(substitute_monomial(multiply(f, g), m), multiply(substitute_monomial(f, m), substitute_monomial(g, m)));
  EXPECT_EQ(substitute_monomial(poly("x"), m), LaurentPolynomial::monomial({1, 0, 0}));
  EXPECT_EQ(substitute_monomial(poly("y"), m), LaurentPolynomial::monomial({1, 1, 2}));
}

TEST(Laurent, ModularEvaluationIsMultiplicative) {
  const std::uint64_t p = kIdentityPrime;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_poly(rng, 3, 6, 3);
    const auto g = random_poly(rng, 3, 6, 3);
    std::vector<std::uint64_t> pt{rng() % (p - 1) + 1, rng() % (p - 1) + 1, rng() % (p - 1) + 1};
    EXPECT_EQ(evaluate_mod_p(multiply(f, g), pt, p), modp::mul(evaluate_mod_p(f, pt, p), evaluate_mod_p(g, pt, p), p));
  }
}

TEST(Laurent, ModularEvaluationSmallCase) {
  const auto f = poly("x + 1/x", {"x"});
  const std::vector<std::uint64_t> pt{3};
  // 3 + 3^{-1} mod 7 = 3 + 5
  EXPECT_EQ(evaluate_mod_p(f, pt, 7), 1u);
  EXPECT_EQ(evaluate_mod_p(poly("-x", {"x"}), pt, 7), 4u);
  const std::vector<std::uint64_t> zero{0};
  EXPECT_THROW(evaluate_mod_p(f, zero, 7), InvalidArgument);
  EXPECT_THROW(evaluate_mod_p(f, pt, 8), InvalidArgument);
}

TEST(Laurent, RenderUsesExplicitNegativeExponents) {
  const auto f = poly("x + 1/x");
  EXPECT_EQ(render(f), "x1^-1 + x1");
  const std::vector<std::string> names{"x", "y", "z"};
  EXPECT_EQ(render(poly("3*x^2*y^-1 - z + 2"), names), "2 - z + 3*x^2*y^-1");
  EXPECT_EQ(render(LaurentPolynomial(2)), "0");
}

TEST(Laurent, RenderRoundTripsThroughParser) {
  std::mt19937_64 rng(9);
  const std::vector<std::string> names{"x1", "x2", "x3"};
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_poly(rng, 3, 7, 3);
    EXPECT_EQ(to_laurent(parse(render(f)), names), f) << render(f);
  }
}
