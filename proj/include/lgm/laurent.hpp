#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace lgm {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent vector of a monomial x1^e1 * ... * xn^en.
using Exponent = std::vector<std::int64_t>;

// Square integer matrix stored row-major as a list of rows.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct Term {
  Exponent exponent;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients
/// in a fixed number of variables.
///
/// Terms are kept sorted lexicographically by exponent with no zero
/// coefficients and no repeated exponents, so two polynomials are equal iff
/// their term lists are equal. The zero polynomial has no terms.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t nvars);

  /// Builds a polynomial from arbitrary terms; duplicates are merged and
  /// zero coefficients dropped. Throws InvalidArgument on exponents of the
  /// wrong length.
  LaurentPolynomial(std::size_t nvars, std::vector<Term> terms);

  static LaurentPolynomial constant(std::size_t nvars, const Integer& c);
  static LaurentPolynomial monomial(Exponent exponent, const Integer& c = 1);
  static LaurentPolynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient at the given exponent, 0 if absent.
  Integer coefficient(const Exponent& e) const;
  Integer constant_term() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  struct Canonical {};
  LaurentPolynomial(std::size_t nvars, std::vector<Term> sorted_terms, Canonical)
      : nvars_(nvars), terms_(std::move(sorted_terms)) {}

  friend class LaurentBuilder;

  std::size_t nvars_;
  std::vector<Term> terms_;
};

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial subtract(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial negate(const LaurentPolynomial& f);
LaurentPolynomial scale(const LaurentPolynomial& f, const Integer& c);
LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Product f*g restricted to the monomials whose exponent satisfies `keep`.
/// Filtered monomials are never materialized, which is what makes truncated
/// power sequences cheap.
LaurentPolynomial multiply_filtered(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                    const std::function<bool(std::span<const std::int64_t>)>& keep);

/// f^d by repeated squaring; f^0 = 1.
LaurentPolynomial power(const LaurentPolynomial& f, unsigned d);

inline Integer constant_term(const LaurentPolynomial& f) { return f.constant_term(); }

/// Monomial change of variables e -> M*e. Throws InvalidArgument unless
/// |det M| = 1.
LaurentPolynomial substitute_monomial(const LaurentPolynomial& f, const IntMatrix& m);

/// Exact determinant of a square integer matrix.
Integer determinant(const IntMatrix& m);

/// Value of f at `point` in Z/pZ. Negative exponents use modular inverses.
/// Throws InvalidArgument when a coordinate is 0 mod p, when p fails a
/// probabilistic primality test, or on a dimension mismatch.
std::uint64_t evaluate_mod_p(const LaurentPolynomial& f, std::span<const std::uint64_t> point,
                             std::uint64_t p);

/// Canonical text in the expression grammar, terms in lexicographic exponent
/// order, e.g. "x1^-1 + 2 + x1". With no names supplied, variables are
/// called x1..xn.
std::string render(const LaurentPolynomial& f, std::span<const std::string> names = {});

std::vector<std::string> default_variable_names(std::size_t nvars);

// Modular helpers shared with the expression evaluator.
namespace modp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce(const Integer& c, std::uint64_t p);
}  // namespace modp

}  // namespace lgm
