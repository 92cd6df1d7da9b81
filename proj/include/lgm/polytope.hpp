#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgm/laurent.hpp"

namespace lgm {

using RationalVector = std::vector<Rational>;

/// Half-space <normal, x> <= offset. For full-dimensional polytopes the
/// normal is a primitive integer vector.
struct Facet {
  std::vector<Integer> normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Convex polytope with exact rational vertices.
///
/// Vertices are exactly the extreme points, sorted lexicographically.
/// Facets are populated only for full-dimensional polytopes. A polytope with
/// integer vertices is a lattice polytope.
class Polytope {
 public:
  /// Convex hull of a finite nonempty point set in Q^dim. Facets are found by
  /// exhaustive search over dim-subsets of points with exact orientation
  /// tests, which is intended for small dimension and a few hundred points.
  static Polytope hull(std::size_t dim, std::vector<RationalVector> points);

  std::size_t dim() const { return dim_; }
  std::size_t affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_; }
  bool is_lattice() const;

  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  /// Membership in the closed polytope (full-dimensional only).
  bool contains(const RationalVector& x) const;

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<Facet> facets_;
};

/// Convex hull of the support. Throws InvalidArgument for the zero
/// polynomial.
Polytope newton_polytope(const LaurentPolynomial& f);

/// True iff P is full-dimensional and every facet inequality is strict at 0.
bool contains_origin_interior(const Polytope& p);

/// {y : <y, x> >= -1 for all x in P}. Each facet <a, x> <= b of P gives the
/// dual vertex -a/b. Throws InvalidArgument unless the origin is interior.
Polytope dual_polytope(const Polytope& p);

/// n! times the Euclidean volume, by fanning the boundary from an interior
/// point. Dimensions 1 to 3; throws InvalidArgument otherwise or for
/// lower-dimensional input.
Rational normalized_volume(const Polytope& p);

struct EhrhartData {
  std::vector<Integer> counts;        // L(k) = #(kP ∩ Z^n), k = 0..kmax
  std::vector<Rational> coefficients; // interpolant through k = 0..n, ascending powers
  bool consistent = true;             // interpolant also reproduces L(k) for k > n
};

inline constexpr std::uint64_t kDefaultLatticeBudget = 100'000'000;

/// Counts lattice points of dilations by bounding-box enumeration. Throws
/// InvalidArgument if kmax < n and BudgetExceeded when the summed box sizes
/// exceed `budget`.
EhrhartData ehrhart_counts(const Polytope& p, std::size_t kmax, std::uint64_t budget = kDefaultLatticeBudget);

struct SemiweakReport {
  bool semiweak = false;
  bool origin_interior = false;
  std::optional<Rational> dual_volume;
  Integer degree;
  std::string reason;
};

/// Origin-interior test on the Newton polytope, then comparison of the
/// normalized dual volume with the anticanonical degree.
SemiweakReport semiweak_check(const LaurentPolynomial& f, const Integer& degree);

}  // namespace lgm
