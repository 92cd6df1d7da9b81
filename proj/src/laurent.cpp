#include "lgm/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <unordered_map>

#include "lgm/errors.hpp"

namespace lgm {

// Assembles canonical polynomials from term lists that are already sorted
// and free of duplicates and zeros.
class LaurentBuilder {
 public:
  static LaurentPolynomial from_canonical(std::size_t nvars, std::vector<Term> terms) {
    return LaurentPolynomial(nvars, std::move(terms), LaurentPolynomial::Canonical{});
  }
};

namespace {

void require_same_nvars(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.nvars() != g.nvars()) {
    throw InvalidArgument("variable count mismatch: " + std::to_string(f.nvars()) + " vs " +
                          std::to_string(g.nvars()));
  }
}

bool exponent_less(const Term& a, const Term& b) { return a.exponent < b.exponent; }

// Sorts, merges duplicates and drops zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), exponent_less);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

// Mixed-radix packing of exponents inside a bounding box. Coordinate 0 is
// the most significant digit, so numeric order of keys is lexicographic
// order of exponents.
struct Packing {
  std::vector<std::int64_t> lo;
  std::vector<std::uint64_t> stride;
  bool fits = true;

  Packing(const std::vector<std::int64_t>& lower, const std::vector<std::int64_t>& upper)
      : lo(lower), stride(lower.size()) {
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
    std::uint64_t s = 1;
    for (std::size_t c = lower.size(); c-- > 0;) {
      stride[c] = s;
      const auto width = static_cast<std::uint64_t>(upper[c] - lower[c]) + 1;
      if (width != 0 && s > kLimit / width) {
        fits = false;
        return;
      }
      s *= width;
    }
  }

  std::uint64_t encode(std::span<const std::int64_t> e) const {
    std::uint64_t key = 0;
    for (std::size_t c = 0; c < e.size(); ++c) key += static_cast<std::uint64_t>(e[c] - lo[c]) * stride[c];
    return key;
  }

  Exponent decode(std::uint64_t key) const {
    Exponent e(lo.size());
    for (std::size_t c = 0; c < lo.size(); ++c) {
      e[c] = static_cast<std::int64_t>(key / stride[c]) + lo[c];
      key %= stride[c];
    }
    return e;
  }
};

void exponent_bounds(const LaurentPolynomial& f, std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi) {
  const std::size_t n = f.nvars();
  lo.assign(n, 0);
  hi.assign(n, 0);
  bool first = true;
  for (const auto& t : f.terms()) {
    for (std::size_t c = 0; c < n; ++c) {
      if (first || t.exponent[c] < lo[c]) lo[c] = t.exponent[c];
      if (first || t.exponent[c] > hi[c]) hi[c] = t.exponent[c];
    }
    first = false;
  }
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::size_t nvars) : nvars_(nvars) {}

LaurentPolynomial::LaurentPolynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
  for (const auto& t : terms) {
    if (t.exponent.size() != nvars) {
      throw InvalidArgument("exponent of length " + std::to_string(t.exponent.size()) +
                            " in a polynomial with " + std::to_string(nvars) + " variables");
    }
  }
  terms_ = canonicalize(std::move(terms));
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Integer& c) {
  if (c == 0) return LaurentPolynomial(nvars);
  return LaurentBuilder::from_canonical(nvars, {Term{Exponent(nvars, 0), c}});
}

LaurentPolynomial LaurentPolynomial::monomial(Exponent exponent, const Integer& c) {
  const std::size_t n = exponent.size();
  if (c == 0) return LaurentPolynomial(n);
  return LaurentBuilder::from_canonical(n, {Term{std::move(exponent), c}});
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

Integer LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return 0;
}

Integer LaurentPolynomial::constant_term() const { return coefficient(Exponent(nvars_, 0)); }

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  require_same_nvars(f, g);
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back(b[j++]);
    } else {
      Integer c = a[i].coeff + b[j].coeff;
      if (c != 0) out.push_back(Term{a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return LaurentBuilder::from_canonical(f.nvars(), std::move(out));
}

LaurentPolynomial negate(const LaurentPolynomial& f) {
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.coeff = -t.coeff;
  return LaurentBuilder::from_canonical(f.nvars(), std::move(out));
}

LaurentPolynomial subtract(const LaurentPolynomial& f, const LaurentPolynomial& g) { return add(f, negate(g)); }

LaurentPolynomial scale(const LaurentPolynomial& f, const Integer& c) {
  if (c == 0) return LaurentPolynomial(f.nvars());
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.coeff *= c;
  return LaurentBuilder::from_canonical(f.nvars(), std::move(out));
}

LaurentPolynomial multiply_filtered(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                    const std::function<bool(std::span<const std::int64_t>)>& keep) {
  require_same_nvars(f, g);
  const std::size_t n = f.nvars();
  if (f.is_zero() || g.is_zero()) return LaurentPolynomial(n);

  std::vector<std::int64_t> flo, fhi, glo, ghi;
  exponent_bounds(f, flo, fhi);
  exponent_bounds(g, glo, ghi);
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    lo[c] = flo[c] + glo[c];
    hi[c] = fhi[c] + ghi[c];
  }

  Exponent e(n);
  const Packing packing(lo, hi);
  if (packing.fits) {
    std::unordered_map<std::uint64_t, Integer> acc;
    acc.reserve(std::min<std::size_t>(f.size() * g.size(), std::size_t{1} << 20));
    for (const auto& a : f.terms()) {
      for (const auto& b : g.terms()) {
        for (std::size_t c = 0; c < n; ++c) e[c] = a.exponent[c] + b.exponent[c];
        if (keep && !keep(e)) continue;
        acc[packing.encode(e)] += a.coeff * b.coeff;
      }
    }
    std::vector<std::pair<std::uint64_t, Integer>> packed;
    packed.reserve(acc.size());
    for (auto& [key, coeff] : acc) {
      if (coeff != 0) packed.emplace_back(key, std::move(coeff));
    }
    std::sort(packed.begin(), packed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(packed.size());
    for (auto& [key, coeff] : packed) out.push_back(Term{packing.decode(key), std::move(coeff)});
    return LaurentBuilder::from_canonical(n, std::move(out));
  }

  // Exponent range too wide to pack into 64 bits.
  std::map<Exponent, Integer> acc;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      for (std::size_t c = 0; c < n; ++c) e[c] = a.exponent[c] + b.exponent[c];
      if (keep && !keep(e)) continue;
      acc[e] += a.coeff * b.coeff;
    }
  }
  std::vector<Term> out;
  for (auto& [exp, coeff] : acc) {
    if (coeff != 0) out.push_back(Term{exp, std::move(coeff)});
  }
  return LaurentBuilder::from_canonical(n, std::move(out));
}

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  return multiply_filtered(f, g, nullptr);
}

LaurentPolynomial power(const LaurentPolynomial& f, unsigned d) {
  LaurentPolynomial result = LaurentPolynomial::constant(f.nvars(), 1);
  LaurentPolynomial base = f;
  while (d > 0) {
    if (d & 1U) result = multiply(result, base);
    d >>= 1U;
    if (d > 0) base = multiply(base, base);
  }
  return result;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

LaurentPolynomial substitute_monomial(const LaurentPolynomial& f, const IntMatrix& m) {
  const std::size_t n = f.nvars();
  if (m.size() != n) throw InvalidArgument("substitution matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  const Integer det = determinant(m);
  if (abs(det) != 1) throw InvalidArgument("substitution matrix is not unimodular (det = " + det.get_str() + ")");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Exponent e(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e[i] += m[i][j] * t.exponent[j];
    out.push_back(Term{std::move(e), t.coeff});
  }
  return LaurentPolynomial(n, std::move(out));
}

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid; valid for any modulus coprime to a.
  __int128 r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    std::swap(r0, r1);
    r1 -= q * r0;
    std::swap(s0, s1);
    s1 -= q * s0;
  }
  if (r0 != 1) throw InvalidArgument("value is not invertible modulo p");
  if (s0 < 0) s0 += p;
  return static_cast<std::uint64_t>(s0);
}

std::uint64_t reduce(const Integer& c, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(c.get_mpz_t(), p);
}

}  // namespace modp

std::uint64_t evaluate_mod_p(const LaurentPolynomial& f, std::span<const std::uint64_t> point, std::uint64_t p) {
  if (point.size() != f.nvars()) throw InvalidArgument("evaluation point has the wrong dimension");
  if (p < 2 || p >= (std::uint64_t{1} << 63)) throw InvalidArgument("modulus out of range");
  const Integer pz(std::to_string(p));
  if (mpz_probab_prime_p(pz.get_mpz_t(), 25) == 0) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");

  const std::size_t n = f.nvars();
  std::vector<std::uint64_t> x(n), xinv(n);
  for (std::size_t c = 0; c < n; ++c) {
    x[c] = point[c] % p;
    if (x[c] == 0) throw InvalidArgument("evaluation point coordinate " + std::to_string(c) + " is zero mod p");
    xinv[c] = modp::inverse(x[c], p);
  }
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = modp::reduce(t.coeff, p);
    for (std::size_t c = 0; c < n; ++c) {
      const std::int64_t k = t.exponent[c];
      if (k > 0) v = modp::mul(v, modp::pow(x[c], static_cast<std::uint64_t>(k), p), p);
      if (k < 0) v = modp::mul(v, modp::pow(xinv[c], static_cast<std::uint64_t>(-k), p), p);
    }
    acc = (acc + v) % p;
  }
  return acc;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string render(const LaurentPolynomial& f, std::span<const std::string> names) {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_variable_names(f.nvars());
    names = fallback;
  }
  if (names.size() != f.nvars()) throw InvalidArgument("wrong number of variable names for rendering");
  if (f.is_zero()) return "0";

  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    const Integer magnitude = abs(t.coeff);
    std::string mono;
    for (std::size_t c = 0; c < f.nvars(); ++c) {
      const std::int64_t k = t.exponent[c];
      if (k == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[c];
      if (k != 1) mono += '^' + std::to_string(k);
    }
    if (mono.empty()) {
      os << magnitude.get_str();
    } else if (magnitude == 1) {
      os << mono;
    } else {
      os << magnitude.get_str() << '*' << mono;
    }
  }
  return os.str();
}

}  // namespace lgm
