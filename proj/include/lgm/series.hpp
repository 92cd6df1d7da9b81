#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgm/laurent.hpp"

namespace lgm {

/// Truncated power series a_0 + a_1 t + ... + a_T t^T with exact integer
/// coefficients.
class IntegerSeries {
 public:
  IntegerSeries() = default;
  explicit IntegerSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Truncation order T; the series stores T + 1 coefficients.
  std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  IntegerSeries truncated(std::size_t order) const;

  friend bool operator==(const IntegerSeries&, const IntegerSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Coefficients of the constant terms of f^0, ..., f^T.
///
/// The running power is kept incrementally. After step i a monomial x^e is
/// dropped when some coordinate cannot return to 0 in the remaining T - i
/// multiplications by f: with s+_c and s-_c the largest positive and negative
/// steps of f in coordinate c, x^e survives iff -e_c <= (T-i) s+_c and
/// e_c <= (T-i) s-_c for every c. Dropped monomials never contribute to a
/// later constant term, so the result is exact.
IntegerSeries constant_term_series(const LaurentPolynomial& f, std::size_t order);

/// Period series of a complete intersection of degrees k_1..k_r in P^N:
/// nonzero only at t^{(k_0+1)e}, where it equals
///     ((k_0+1)e)! * prod_j (k_j e)! / (e!)^{N+1},   k_0 = N - sum k_j.
/// This is the normalization that agrees with the constant-term series of
/// the Hori-Vafa polynomial. Throws InvalidArgument unless every k_j >= 2
/// and sum k_j <= N.
IntegerSeries ci_period_closed_form(int ambient_dim, std::span<const int> degrees, std::size_t order);

/// Binomial transform a -> series of f + alpha when `a` is the series of f.
IntegerSeries shift_series(const IntegerSeries& a, const Integer& alpha);

/// Shift-normalized form: the series of f - (constant term of f), i.e. the
/// transform by -a_1. Two series agree up to f -> f + alpha iff their
/// normalized forms agree.
IntegerSeries normalize_shift(const IntegerSeries& a);

struct MatchReport {
  bool match = true;
  std::size_t compared_upto = 0;
  // True when the series agree only after normalize_shift.
  bool up_to_shift = false;
  // Set on mismatch.
  std::optional<std::size_t> index;
  Integer lhs;
  Integer rhs;
};

/// Compares coefficients 0..upto. Throws InvalidArgument if either series is
/// shorter than that.
MatchReport compare_series(const IntegerSeries& a, const IntegerSeries& b, std::size_t upto);

std::string render(const IntegerSeries& s);

}  // namespace lgm
