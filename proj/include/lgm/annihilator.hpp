#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgm/laurent.hpp"
#include "lgm/series.hpp"

namespace lgm {

/// Operator sum_{l,j} c_{l,j} t^l D^j with D = t d/dt, 0 <= l <= degree,
/// 0 <= j <= order. Only nonzero coefficients are stored.
struct DifferentialOperator {
  std::size_t order = 0;
  std::size_t degree = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> coeffs;  // (l, j) -> c

  Rational coefficient(std::size_t l, std::size_t j) const;
  friend bool operator==(const DifferentialOperator&, const DifferentialOperator&) = default;
};

/// Rescales so the first nonzero coefficient in (l, j) order is 1. Throws
/// InvalidArgument for the zero operator.
DifferentialOperator canonical(DifferentialOperator op);

/// Coefficients of L applied to s, for t^0 .. t^{s.order()}.
std::vector<Rational> apply_operator(const DifferentialOperator& op, const IntegerSeries& s);

/// Basis of all operators with the given bounds whose image vanishes at
/// t^0 .. t^terms, each canonically scaled. Empty when none exists.
std::vector<DifferentialOperator> find_annihilator(const IntegerSeries& s, std::size_t order, std::size_t degree,
                                                   std::size_t terms);

struct SweepResult {
  std::size_t order;
  std::size_t degree;
  std::vector<DifferentialOperator> basis;
};

/// Scans order <= max_order, degree <= max_degree, and returns the
/// nonempty cell minimizing (order + degree, order).
std::optional<SweepResult> sweep_annihilators(const IntegerSeries& s, std::size_t terms, std::size_t max_order = 4,
                                              std::size_t max_degree = 6);

/// e.g. "D - t - t*D", "t^2*D^3 + 1/2*t".
std::string render(const DifferentialOperator& op);

}  // namespace lgm
