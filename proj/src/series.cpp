#include "lgm/series.hpp"

#include <numeric>
#include <sstream>

#include "lgm/errors.hpp"

namespace lgm {

namespace {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

IntegerSeries IntegerSeries::truncated(std::size_t order) const {
  if (order + 1 > coeffs_.size()) throw InvalidArgument("cannot truncate a series beyond its order");
  return IntegerSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

IntegerSeries constant_term_series(const LaurentPolynomial& f, std::size_t order) {
  const std::size_t n = f.nvars();
  std::vector<std::int64_t> up(n, 0), down(n, 0);
  for (const auto& t : f.terms()) {
    for (std::size_t c = 0; c < n; ++c) {
      up[c] = std::max(up[c], t.exponent[c]);
      down[c] = std::max(down[c], -t.exponent[c]);
    }
  }

  std::vector<Integer> coeffs;
  coeffs.reserve(order + 1);
  coeffs.emplace_back(1);
  LaurentPolynomial current = LaurentPolynomial::constant(n, 1);
  for (std::size_t i = 1; i <= order; ++i) {
    const auto remaining = static_cast<std::int64_t>(order - i);
    current = multiply_filtered(current, f, [&](std::span<const std::int64_t> e) {
      for (std::size_t c = 0; c < n; ++c) {
        if (-e[c] > remaining * up[c] || e[c] > remaining * down[c]) return false;
      }
      return true;
    });
    coeffs.push_back(current.constant_term());
  }
  return IntegerSeries(std::move(coeffs));
}

IntegerSeries ci_period_closed_form(int ambient_dim, std::span<const int> degrees, std::size_t order) {
  int total = 0;
  for (int k : degrees) {
    if (k < 2) throw InvalidArgument("hypersurface degrees must be at least 2");
    total += k;
  }
  if (ambient_dim < 1 || total > ambient_dim) {
    throw InvalidArgument("not Fano: degrees sum to " + std::to_string(total) + " > N = " + std::to_string(ambient_dim));
  }
  const auto k0 = static_cast<unsigned long>(ambient_dim - total);
  const std::size_t step = k0 + 1;

  std::vector<Integer> coeffs(order + 1, 0);
  for (std::size_t e = 0; e * step <= order; ++e) {
    Integer num = factorial(step * e);
    for (int k : degrees) num *= factorial(static_cast<unsigned long>(k) * e);
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), factorial(e).get_mpz_t(), static_cast<unsigned long>(ambient_dim) + 1);
    coeffs[e * step] = num / den;
  }
  return IntegerSeries(std::move(coeffs));
}

IntegerSeries shift_series(const IntegerSeries& a, const Integer& alpha) {
  std::vector<Integer> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer alpha_pow = 1;  // alpha^(i-j), j running downward from i
    for (std::size_t j = i + 1; j-- > 0;) {
      out[i] += binomial(i, j) * alpha_pow * a[j];
      alpha_pow *= alpha;
    }
  }
  return IntegerSeries(std::move(out));
}

IntegerSeries normalize_shift(const IntegerSeries& a) {
  if (a.size() < 2) return a;
  return shift_series(a, -a[1]);
}

MatchReport compare_series(const IntegerSeries& a, const IntegerSeries& b, std::size_t upto) {
  if (upto >= a.size() || upto >= b.size()) {
    throw InvalidArgument("comparison order " + std::to_string(upto) + " exceeds a series truncation");
  }
  MatchReport r;
  r.compared_upto = upto;
  for (std::size_t i = 0; i <= upto; ++i) {
    if (a[i] != b[i]) {
      r.match = false;
      r.index = i;
      r.lhs = a[i];
      r.rhs = b[i];
      break;
    }
  }
  return r;
}

std::string render(const IntegerSeries& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) os << ", ";
    os << s[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace lgm
