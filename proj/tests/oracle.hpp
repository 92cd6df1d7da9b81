#pragma once

// Deliberately simple reference implementations used as test oracles. They
// share no code with the library beyond reading a polynomial's term list.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "lgm/laurent.hpp"

namespace oracle {

using Poly = std::map<std::vector<std::int64_t>, mpz_class>;

inline Poly from(const lgm::LaurentPolynomial& f) {
  Poly p;
  for (const auto& t : f.terms()) p[t.exponent] = t.coeff;
  return p;
}

inline Poly one(std::size_t n) { return Poly{{std::vector<std::int64_t>(n, 0), 1}}; }

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<std::int64_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline mpz_class constant_term(const Poly& p, std::size_t n) {
  const auto it = p.find(std::vector<std::int64_t>(n, 0));
  return it == p.end() ? mpz_class(0) : it->second;
}

// ct(f^i) for i = 0..order by plain repeated multiplication.
inline std::vector<mpz_class> naive_series(const lgm::LaurentPolynomial& f, std::size_t order) {
  const std::size_t n = f.nvars();
  const Poly base = from(f);
  Poly cur = one(n);
  std::vector<mpz_class> out{constant_term(cur, n)};
  for (std::size_t i = 1; i <= order; ++i) {
    cur = mul(cur, base);
    out.push_back(constant_term(cur, n));
  }
  return out;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class r = 1;
  for (unsigned long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline mpz_class multinomial(const std::vector<unsigned long>& parts) {
  unsigned long total = 0;
  mpz_class den = 1;
  for (auto p : parts) {
    total += p;
    den *= factorial(p);
  }
  return factorial(total) / den;
}

// Random matrix in GL(n, Z) as a product of elementary row operations and
// sign flips.
inline lgm::IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 6) {
  lgm::IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (a == b) b = (b + 1) % n;
    const int k = coef(rng);
    for (std::size_t c = 0; c < n; ++c) m[a][c] += k * m[b][c];
    if (coef(rng) == 0) {
      for (std::size_t c = 0; c < n; ++c) m[a][c] = -m[a][c];
    }
  }
  return m;
}

}  // namespace oracle
