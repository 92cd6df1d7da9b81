#include "lgm/polytope.hpp"

#include <algorithm>
#include <set>

#include "lgm/errors.hpp"

namespace lgm {

namespace {

using IntVector = std::vector<Integer>;
using IntRows = std::vector<IntVector>;

Integer bareiss_det(IntRows a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
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
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t rational_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t integer_rank(const IntRows& rows) {
  std::vector<RationalVector> q;
  q.reserve(rows.size());
  for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
  return rational_rank(std::move(q));
}

// Advances `idx` to the next k-combination of {0..m-1}; false when done.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < m - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Vector orthogonal to the n-1 given rows (generalized cross product).
IntVector cofactor_normal(const IntRows& rows, std::size_t n) {
  IntVector normal(n);
  for (std::size_t c = 0; c < n; ++c) {
    IntRows minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      IntVector m;
      m.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) m.push_back(r[j]);
      }
      minor.push_back(std::move(m));
    }
    normal[c] = bareiss_det(std::move(minor));
    if (c % 2 == 1) normal[c] = -normal[c];
  }
  return normal;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

Rational det3(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

RationalVector minus(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<Rational> solve_rational(std::vector<RationalVector> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) throw Error("singular interpolation system");
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational factor = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= factor * a[c][j];
      b[r] -= factor * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

Polytope Polytope::hull(std::size_t dim, std::vector<RationalVector> points) {
  if (points.empty()) throw InvalidArgument("convex hull of an empty point set");
  for (auto& p : points) {
    if (p.size() != dim) throw InvalidArgument("point of the wrong dimension");
    for (auto& x : p) x.canonicalize();
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope poly;
  poly.dim_ = dim;

  // Scale to integer coordinates so orientation tests stay in Z.
  Integer scale = 1;
  for (const auto& p : points)
    for (const auto& x : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  IntRows ip(points.size(), IntVector(dim));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t c = 0; c < dim; ++c) ip[i][c] = points[i][c].get_num() * (scale / points[i][c].get_den());

  IntRows diffs;
  for (std::size_t i = 1; i < ip.size(); ++i) {
    IntVector d(dim);
    for (std::size_t c = 0; c < dim; ++c) d[c] = ip[i][c] - ip[0][c];
    diffs.push_back(std::move(d));
  }
  poly.affine_dim_ = integer_rank(diffs);

  if (poly.affine_dim_ == 0) {
    poly.vertices_ = {points.front()};
    return poly;
  }

  if (poly.affine_dim_ < dim) {
    // Project onto coordinates on which the affine hull maps bijectively and
    // take the hull there.
    const std::size_t r = poly.affine_dim_;
    std::vector<std::size_t> coords(r);
    for (std::size_t i = 0; i < r; ++i) coords[i] = i;
    do {
      IntRows sub;
      for (const auto& d : diffs) {
        IntVector s;
        for (std::size_t c : coords) s.push_back(d[c]);
        sub.push_back(std::move(s));
      }
      if (integer_rank(sub) == r) break;
    } while (next_combination(coords, dim));

    std::vector<RationalVector> projected;
    for (const auto& p : points) {
      RationalVector q;
      for (std::size_t c : coords) q.push_back(p[c]);
      projected.push_back(std::move(q));
    }
    const Polytope low = hull(r, projected);
    for (const auto& v : low.vertices()) {
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (projected[i] == v) {
          poly.vertices_.push_back(points[i]);
          break;
        }
      }
    }
    std::sort(poly.vertices_.begin(), poly.vertices_.end());
    return poly;
  }

  std::set<std::pair<IntVector, Rational>> found;
  std::vector<std::size_t> idx(dim);
  for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
  if (points.size() >= dim) {
    do {
      IntRows rows;
      for (std::size_t j = 1; j < dim; ++j) {
        IntVector d(dim);
        for (std::size_t c = 0; c < dim; ++c) d[c] = ip[idx[j]][c] - ip[idx[0]][c];
        rows.push_back(std::move(d));
      }
      IntVector normal = dim == 1 ? IntVector{Integer(1)} : cofactor_normal(rows, dim);
      if (std::all_of(normal.begin(), normal.end(), [](const Integer& x) { return x == 0; })) continue;
      make_primitive(normal);
      Integer h = dot(normal, ip[idx[0]]);
      bool above = false, below = false;
      for (const auto& q : ip) {
        const int s = sgn(dot(normal, q) - h);
        above = above || s > 0;
        below = below || s < 0;
        if (above && below) break;
      }
      if (above && below) continue;
      if (above) {
        for (auto& x : normal) x = -x;
        h = -h;
      }
      Rational offset(h, scale);
      offset.canonicalize();
      found.emplace(std::move(normal), std::move(offset));
    } while (next_combination(idx, points.size()));
  }
  for (const auto& [normal, offset] : found) poly.facets_.push_back(Facet{normal, offset});

  for (std::size_t i = 0; i < points.size(); ++i) {
    IntRows tight;
    for (const auto& f : poly.facets_) {
      if (dot(f.normal, points[i]) == f.offset) tight.push_back(f.normal);
    }
    if (tight.size() >= dim && integer_rank(tight) == dim) poly.vertices_.push_back(points[i]);
  }
  return poly;
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    for (const auto& x : v) {
      if (x.get_den() != 1) return false;
    }
  return true;
}

bool Polytope::contains(const RationalVector& x) const {
  if (!full_dimensional()) throw InvalidArgument("membership test needs a full-dimensional polytope");
  if (x.size() != dim_) throw InvalidArgument("point of the wrong dimension");
  for (const auto& f : facets_) {
    if (dot(f.normal, x) > f.offset) return false;
  }
  return true;
}

Polytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw InvalidArgument("the zero polynomial has no Newton polytope");
  std::vector<RationalVector> points;
  points.reserve(f.size());
  for (const auto& t : f.terms()) {
    RationalVector p;
    for (auto k : t.exponent) p.emplace_back(static_cast<long>(k));
    points.push_back(std::move(p));
  }
  return Polytope::hull(f.nvars(), std::move(points));
}

bool contains_origin_interior(const Polytope& p) {
  if (!p.full_dimensional()) return false;
  return std::all_of(p.facets().begin(), p.facets().end(), [](const Facet& f) { return f.offset > 0; });
}

Polytope dual_polytope(const Polytope& p) {
  if (!contains_origin_interior(p)) throw InvalidArgument("dual polytope needs the origin in the interior");
  std::vector<RationalVector> points;
  for (const auto& f : p.facets()) {
    RationalVector y;
    for (const auto& a : f.normal) y.push_back(-Rational(a) / f.offset);
    points.push_back(std::move(y));
  }
  return Polytope::hull(p.dim(), std::move(points));
}

Rational normalized_volume(const Polytope& p) {
  if (!p.full_dimensional()) throw InvalidArgument("volume of a lower-dimensional polytope");
  const std::size_t n = p.dim();
  const auto& verts = p.vertices();
  if (n == 1) return verts.back()[0] - verts.front()[0];
  if (n > 3) throw InvalidArgument("normalized volume is implemented for dimension at most 3");

  RationalVector centre(n, 0);
  for (const auto& v : verts)
    for (std::size_t c = 0; c < n; ++c) centre[c] += v[c];
  for (auto& x : centre) x /= static_cast<long>(verts.size());

  Rational total = 0;
  for (const auto& f : p.facets()) {
    std::vector<RationalVector> on;
    for (const auto& v : verts) {
      if (dot(f.normal, v) == f.offset) on.push_back(v);
    }
    if (n == 2) {
      const RationalVector a = minus(on[0], centre);
      const RationalVector b = minus(on[1], centre);
      total += abs(a[0] * b[1] - a[1] * b[0]);
      continue;
    }
    // Order the facet polygon around its first vertex, then fan it.
    const RationalVector normal(f.normal.begin(), f.normal.end());
    const RationalVector v0 = on.front();
    std::sort(on.begin() + 1, on.end(), [&](const RationalVector& a, const RationalVector& b) {
      return det3(normal, minus(a, v0), minus(b, v0)) > 0;
    });
    const RationalVector apex = minus(v0, centre);
    for (std::size_t i = 1; i + 1 < on.size(); ++i) {
      total += abs(det3(apex, minus(on[i], centre), minus(on[i + 1], centre)));
    }
  }
  return total;
}

EhrhartData ehrhart_counts(const Polytope& p, std::size_t kmax, std::uint64_t budget) {
  const std::size_t n = p.dim();
  if (!p.full_dimensional()) throw InvalidArgument("Ehrhart counts need a full-dimensional polytope");
  if (kmax < n) throw InvalidArgument("kmax must be at least the dimension " + std::to_string(n));

  RationalVector lo = p.vertices().front(), hi = p.vertices().front();
  for (const auto& v : p.vertices()) {
    for (std::size_t c = 0; c < n; ++c) {
      if (v[c] < lo[c]) lo[c] = v[c];
      if (v[c] > hi[c]) hi[c] = v[c];
    }
  }

  // Box sizes first, so an oversized request fails before any work.
  std::vector<std::vector<std::int64_t>> box_lo(kmax + 1), box_hi(kmax + 1);
  Integer candidates = 0;
  for (std::size_t k = 0; k <= kmax; ++k) {
    Integer size = 1;
    for (std::size_t c = 0; c < n; ++c) {
      const Integer a = ceil_q(lo[c] * static_cast<long>(k));
      const Integer b = floor_q(hi[c] * static_cast<long>(k));
      box_lo[k].push_back(a.get_si());
      box_hi[k].push_back(b.get_si());
      size *= (b >= a) ? Integer(b - a + 1) : Integer(0);
    }
    candidates += size;
  }
  if (candidates > Integer(std::to_string(budget))) {
    throw BudgetExceeded("lattice enumeration needs " + candidates.get_str() + " candidate points, budget is " +
                         std::to_string(budget));
  }

  std::vector<std::vector<std::int64_t>> normals;
  for (const auto& f : p.facets()) {
    std::vector<std::int64_t> row;
    for (const auto& a : f.normal) row.push_back(a.get_si());
    normals.push_back(std::move(row));
  }

  EhrhartData out;
  for (std::size_t k = 0; k <= kmax; ++k) {
    std::vector<std::int64_t> bound;
    for (const auto& f : p.facets()) bound.push_back(floor_q(f.offset * static_cast<long>(k)).get_si());
    std::uint64_t count = 0;
    std::vector<std::int64_t> x = box_lo[k];
    bool empty = false;
    for (std::size_t c = 0; c < n; ++c) empty = empty || box_lo[k][c] > box_hi[k][c];
    while (!empty) {
      bool inside = true;
      for (std::size_t j = 0; j < normals.size() && inside; ++j) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < n; ++c) s += normals[j][c] * x[c];
        inside = s <= bound[j];
      }
      if (inside) ++count;
      std::size_t c = n;
      while (c-- > 0) {
        if (x[c] < box_hi[k][c]) {
          ++x[c];
          break;
        }
        x[c] = box_lo[k][c];
      }
      if (c == static_cast<std::size_t>(-1)) break;
    }
    out.counts.emplace_back(std::to_string(count));
  }

  std::vector<RationalVector> vandermonde;
  std::vector<Rational> values;
  for (std::size_t k = 0; k <= n; ++k) {
    RationalVector row;
    Rational pw = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      row.push_back(pw);
      pw *= static_cast<long>(k);
    }
    vandermonde.push_back(std::move(row));
    values.emplace_back(out.counts[k]);
  }
  out.coefficients = solve_rational(std::move(vandermonde), std::move(values));

  for (std::size_t k = n + 1; k <= kmax; ++k) {
    Rational v = 0, pw = 1;
    for (const auto& c : out.coefficients) {
      v += c * pw;
      pw *= static_cast<long>(k);
    }
    if (v != Rational(out.counts[k])) out.consistent = false;
  }
  return out;
}

SemiweakReport semiweak_check(const LaurentPolynomial& f, const Integer& degree) {
  SemiweakReport r;
  r.degree = degree;
  if (f.is_zero()) {
    r.reason = "zero polynomial";
    return r;
  }
  const Polytope newton = newton_polytope(f);
  r.origin_interior = contains_origin_interior(newton);
  if (!r.origin_interior) {
    r.reason = "Newton polytope does not contain the origin in its interior";
    return r;
  }
  r.dual_volume = normalized_volume(dual_polytope(newton));
  r.semiweak = *r.dual_volume == Rational(degree);
  if (!r.semiweak) r.reason = "dual volume " + r.dual_volume->get_str() + " != degree " + degree.get_str();
  return r;
}

}  // namespace lgm
