#include "lgm/annihilator.hpp"

#include <algorithm>
#include <sstream>

#include "lgm/errors.hpp"

namespace lgm {

namespace {

using Row = std::vector<Integer>;

void strip_content(Row& row) {
  Integer g = 0;
  for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// Reduced row echelon form over Z: every pivot column is zero outside its
// pivot row. Returns the pivot column of each surviving row.
std::vector<std::size_t> integer_rref(std::vector<Row>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    const Row& p = rows[rank];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p[c].get_mpz_t(), rows[r][c].get_mpz_t());
      const Integer mp = p[c] / g;
      const Integer mr = rows[r][c] / g;
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] * mp - p[j] * mr;
      strip_content(rows[r]);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::size_t index_of(std::size_t l, std::size_t j, std::size_t order) { return l * (order + 1) + j; }

}  // namespace

Rational DifferentialOperator::coefficient(std::size_t l, std::size_t j) const {
  const auto it = coeffs.find({l, j});
  return it == coeffs.end() ? Rational(0) : it->second;
}

DifferentialOperator canonical(DifferentialOperator op) {
  for (auto it = op.coeffs.begin(); it != op.coeffs.end();) {
    it = it->second == 0 ? op.coeffs.erase(it) : std::next(it);
  }
  if (op.coeffs.empty()) throw InvalidArgument("the zero operator has no canonical scaling");
  const Rational lead = op.coeffs.begin()->second;
  for (auto& [key, c] : op.coeffs) c /= lead;
  return op;
}

std::vector<Rational> apply_operator(const DifferentialOperator& op, const IntegerSeries& s) {
  std::vector<Rational> out(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (const auto& [key, c] : op.coeffs) {
      const auto [l, j] = key;
      if (l > i) continue;
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), i - l, j);
      out[i] += c * Rational(s[i - l] * power);
    }
  }
  return out;
}

std::vector<DifferentialOperator> find_annihilator(const IntegerSeries& s, std::size_t order, std::size_t degree,
                                                   std::size_t terms) {
  if (terms > s.order()) {
    throw InvalidArgument("terms " + std::to_string(terms) + " exceeds the series order " + std::to_string(s.order()));
  }
  const std::size_t unknowns = (order + 1) * (degree + 1);
  std::vector<Row> rows;
  rows.reserve(terms + 1);
  for (std::size_t i = 0; i <= terms; ++i) {
    Row row(unknowns, 0);
    for (std::size_t l = 0; l <= degree && l <= i; ++l) {
      Integer power = 1;
      for (std::size_t j = 0; j <= order; ++j) {
        row[index_of(l, j, order)] = s[i - l] * power;
        power *= static_cast<unsigned long>(i - l);
      }
    }
    strip_content(row);
    if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; })) rows.push_back(std::move(row));
  }
  const std::vector<std::size_t> pivots = integer_rref(rows, unknowns);

  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<DifferentialOperator> basis;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    DifferentialOperator op;
    op.order = order;
    op.degree = degree;
    std::vector<Rational> v(unknowns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -Rational(rows[r][free]) / Rational(rows[r][pivots[r]]);
    for (std::size_t k = 0; k < unknowns; ++k) {
      if (v[k] != 0) op.coeffs[{k / (order + 1), k % (order + 1)}] = v[k];
    }
    op = canonical(std::move(op));
    const auto image = apply_operator(op, s.truncated(terms));
    for (const auto& x : image) {
      if (x != 0) throw Error("annihilator recheck failed");
    }
    basis.push_back(std::move(op));
  }
  return basis;
}

std::optional<SweepResult> sweep_annihilators(const IntegerSeries& s, std::size_t terms, std::size_t max_order,
                                              std::size_t max_degree) {
  for (std::size_t total = 0; total <= max_order + max_degree; ++total) {
    for (std::size_t m = 0; m <= std::min(total, max_order); ++m) {
      const std::size_t r = total - m;
      if (r > max_degree) continue;
      if ((m + 1) * (r + 1) > terms + 1) continue;
      auto basis = find_annihilator(s, m, r, terms);
      if (!basis.empty()) return SweepResult{m, r, std::move(basis)};
    }
  }
  return std::nullopt;
}

std::string render(const DifferentialOperator& op) {
  if (op.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : op.coeffs) {
    if (c == 0) continue;
    const auto [l, j] = key;
    std::string mono;
    if (l > 0) mono = l == 1 ? "t" : "t^" + std::to_string(l);
    if (j > 0) {
      if (!mono.empty()) mono += "*";
      mono += j == 1 ? "D" : "D^" + std::to_string(j);
    }
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace lgm
