#include "lgm/constructors.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lgm/errors.hpp"

namespace lgm {

namespace {

// Variable name for a two-index family; digits run together while both
// indices are single-digit, which covers every grid used in practice.
std::string indexed_name(char prefix, int i, int j) {
  if (i < 10 && j < 10) return std::string(1, prefix) + std::to_string(i) + std::to_string(j);
  return std::string(1, prefix) + std::to_string(i) + "c" + std::to_string(j);
}

// Light-weight builders that skip neutral elements.
Expr add_expr(const Expr& a, const Expr& b) {
  if (a.is_constant(0)) return b;
  if (b.is_constant(0)) return a;
  return Expr::sum({a, b});
}

Expr sub_expr(const Expr& a, const Expr& b) {
  if (b.is_constant(0)) return a;
  if (a.is_constant(0)) return Expr::negate(b);
  return Expr::difference(a, b);
}

Expr mul_expr(const Expr& a, const Expr& b) {
  if (a.is_constant(0) || b.is_constant(0)) return Expr::constant(0);
  if (a.is_constant(1)) return b;
  if (b.is_constant(1)) return a;
  return Expr::product({a, b});
}

Expr div_expr(const Expr& a, const Expr& b) {
  if (b.is_constant(1)) return a;
  // a / (1/q) = a*q
  if (b.kind() == Expr::Kind::Quotient && b.children()[0].is_constant(1)) return mul_expr(a, b.children()[1]);
  return Expr::quotient(a, b);
}

Expr pow_expr(const Expr& a, std::int64_t k) {
  if (k == 0) return Expr::constant(1);
  if (k == 1) return a;
  return Expr::power(a, k);
}

using DegreeSplit = std::map<std::int64_t, Expr>;

void accumulate(DegreeSplit& into, std::int64_t degree, const Expr& coeff) {
  auto it = into.find(degree);
  if (it == into.end()) {
    into.emplace(degree, coeff);
  } else {
    it->second = add_expr(it->second, coeff);
  }
}

DegreeSplit convolve(const DegreeSplit& a, const DegreeSplit& b) {
  DegreeSplit out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) accumulate(out, da + db, mul_expr(ca, cb));
  return out;
}

struct NotLinear {};

// Writes e as sum_d c_d * v^d with coefficients free of v. Throws NotLinear
// when v sits in a denominator that is not a single power of v.
DegreeSplit split_by_degree(const Expr& e, const std::string& v) {
  if (!variables(e).contains(v)) return {{0, e}};
  const auto ch = e.children();
  switch (e.kind()) {
    case Expr::Kind::Variable:
      return {{1, Expr::constant(1)}};
    case Expr::Kind::Constant:
      return {{0, e}};
    case Expr::Kind::Sum: {
      DegreeSplit out;
      for (const auto& c : ch)
        for (const auto& [d, coeff] : split_by_degree(c, v)) accumulate(out, d, coeff);
      return out;
    }
    case Expr::Kind::Difference: {
      DegreeSplit out = split_by_degree(ch[0], v);
      for (const auto& [d, coeff] : split_by_degree(ch[1], v)) {
        auto it = out.find(d);
        if (it == out.end()) {
          out.emplace(d, Expr::negate(coeff));
        } else {
          it->second = sub_expr(it->second, coeff);
        }
      }
      return out;
    }
    case Expr::Kind::Negate: {
      DegreeSplit out = split_by_degree(ch[0], v);
      for (auto& [d, coeff] : out) coeff = Expr::negate(coeff);
      return out;
    }
    case Expr::Kind::Product: {
      DegreeSplit out{{0, Expr::constant(1)}};
      for (const auto& c : ch) out = convolve(out, split_by_degree(c, v));
      return out;
    }
    case Expr::Kind::Quotient: {
      const DegreeSplit den = split_by_degree(ch[1], v);
      if (den.size() != 1) throw NotLinear{};
      const auto& [dd, dc] = *den.begin();
      DegreeSplit out;
      for (const auto& [d, coeff] : split_by_degree(ch[0], v)) out.emplace(d - dd, div_expr(coeff, dc));
      return out;
    }
    case Expr::Kind::Power: {
      const DegreeSplit base = split_by_degree(ch[0], v);
      const std::int64_t k = e.exponent();
      if (k < 0) {
        if (base.size() != 1) throw NotLinear{};
        const auto& [d, coeff] = *base.begin();
        return {{d * k, pow_expr(coeff, k)}};
      }
      DegreeSplit out{{0, Expr::constant(1)}};
      for (std::int64_t i = 0; i < k; ++i) out = convolve(out, base);
      return out;
    }
  }
  throw NotLinear{};
}

std::vector<Exponent> checked_rays(std::span<const Exponent> rays) {
  if (rays.empty()) throw InvalidArgument("no rays given");
  const std::size_t n = rays.front().size();
  if (n == 0) throw InvalidArgument("rays must have positive length");
  std::set<Exponent> seen;
  for (const auto& r : rays) {
    if (r.size() != n) throw InvalidArgument("rays have differing dimensions");
    if (!seen.insert(r).second) throw InvalidArgument("duplicate ray");
  }
  return {rays.begin(), rays.end()};
}

}  // namespace

void validate(const ConstrainedModel& model) {
  const std::set<std::string> declared(model.variables.begin(), model.variables.end());
  if (declared.size() != model.variables.size()) throw InvalidArgument("model declares a variable twice");
  auto check = [&](const Expr& e, const std::string& where) {
    for (const auto& v : variables(e)) {
      if (!declared.contains(v)) throw InvalidArgument("undeclared variable '" + v + "' in " + where);
    }
  };
  for (std::size_t i = 0; i < model.constraints.size(); ++i) check(model.constraints[i], "constraint " + std::to_string(i));
  check(model.potential, "potential");
  if (model.constraints.size() >= model.variables.size()) {
    throw InvalidArgument("model has " + std::to_string(model.constraints.size()) + " constraints in " +
                          std::to_string(model.variables.size()) + " variables");
  }
}

ConstrainedModel substitute(const ConstrainedModel& model, const Bindings& bindings) {
  ConstrainedModel out;
  std::set<std::string> introduced;
  for (const auto& c : model.constraints) {
    out.constraints.push_back(substitute(c, bindings));
    introduced.merge(variables(out.constraints.back()));
  }
  out.potential = substitute(model.potential, bindings);
  introduced.merge(variables(out.potential));
  for (const auto& [name, value] : bindings) introduced.merge(variables(value));

  for (const auto& v : model.variables) {
    if (!bindings.contains(v)) out.variables.push_back(v);
  }
  for (const auto& v : introduced) {
    if (std::find(out.variables.begin(), out.variables.end(), v) == out.variables.end()) out.variables.push_back(v);
  }
  return out;
}

LaurentPolynomial toric_polynomial(std::span<const Exponent> rays) {
  auto checked = checked_rays(rays);
  std::vector<Term> terms;
  for (auto& r : checked) terms.push_back(Term{std::move(r), 1});
  const std::size_t n = terms.front().exponent.size();
  return LaurentPolynomial(n, std::move(terms));
}

NamedPolynomial hori_vafa_ci(int ambient_dim, std::span<const int> degrees) {
  int total = 0;
  for (int k : degrees) {
    if (k < 2) throw InvalidArgument("hypersurface degrees must be at least 2");
    total += k;
  }
  if (total > ambient_dim) throw InvalidArgument("not Fano: degrees sum past N");
  const int k0 = ambient_dim - total;

  NamedPolynomial out{LaurentPolynomial(0), {}};
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (int j = 1; j < degrees[i]; ++j) out.variables.push_back(indexed_name('x', static_cast<int>(i) + 1, j));
  const std::size_t nx = out.variables.size();
  for (int s = 1; s <= k0; ++s) out.variables.push_back("y" + std::to_string(s));
  const std::size_t n = out.variables.size();

  // Numerator product over the hypersurfaces.
  LaurentPolynomial numerator = LaurentPolynomial::constant(n, 1);
  std::size_t next = 0;
  for (int k : degrees) {
    LaurentPolynomial block = LaurentPolynomial::constant(n, 1);
    for (int j = 1; j < k; ++j) block = add(block, LaurentPolynomial::variable(n, next++));
    numerator = multiply(numerator, power(block, static_cast<unsigned>(k)));
  }
  Exponent denominator(n, -1);
  LaurentPolynomial f = multiply(numerator, LaurentPolynomial::monomial(denominator));
  for (std::size_t s = nx; s < n; ++s) f = add(f, LaurentPolynomial::variable(n, s));
  out.poly = std::move(f);
  return out;
}

NamedPolynomial grassmannian_polynomial(int k, int n) {
  if (k < 1 || k >= n) throw InvalidArgument("invalid Grassmannian G(" + std::to_string(k) + "," + std::to_string(n) + ")");
  const int rows = n - k;
  const int cols = k;
  const auto nvars = static_cast<std::size_t>(rows * cols);
  auto index = [&](int a, int b) { return static_cast<std::size_t>((a - 1) * cols + (b - 1)); };

  NamedPolynomial out{LaurentPolynomial(nvars), {}};
  for (int a = 1; a <= rows; ++a)
    for (int b = 1; b <= cols; ++b) out.variables.push_back(indexed_name('X', a, b));

  std::vector<Term> terms;
  auto unit = [&](std::size_t i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    return e;
  };
  terms.push_back(Term{unit(index(1, 1)), 1});
  for (int a = 1; a <= rows; ++a) {
    for (int b = 1; b <= cols; ++b) {
      const std::size_t here = index(a, b);
      if (a + 1 <= rows) {
        Exponent e = unit(index(a + 1, b));
        e[here] -= 1;
        terms.push_back(Term{std::move(e), 1});
      }
      if (b + 1 <= cols) {
        Exponent e = unit(index(a, b + 1));
        e[here] -= 1;
        terms.push_back(Term{std::move(e), 1});
      }
    }
  }
  Exponent last(nvars, 0);
  last[index(rows, cols)] = -1;
  terms.push_back(Term{std::move(last), 1});
  out.poly = LaurentPolynomial(nvars, std::move(terms));
  return out;
}

std::vector<Expr> grassmannian_hyperplane_factors(int k, int n) {
  if (k < 1 || k >= n) throw InvalidArgument("invalid Grassmannian G(" + std::to_string(k) + "," + std::to_string(n) + ")");
  const int rows = n - k;
  const int cols = k;
  auto var = [](int a, int b) { return Expr::variable(indexed_name('X', a, b)); };

  std::vector<Expr> factors;
  factors.push_back(var(1, 1));
  for (int j = 1; j <= rows - 1; ++j) {
    std::vector<Expr> terms;
    for (int b = 1; b <= cols; ++b) terms.push_back(Expr::quotient(var(j + 1, b), var(j, b)));
    factors.push_back(Expr::sum(std::move(terms)));
  }
  factors.push_back(Expr::quotient(Expr::constant(1), var(rows, cols)));
  for (int i = 2; i <= cols; ++i) {
    std::vector<Expr> terms;
    for (int a = 1; a <= rows; ++a) terms.push_back(Expr::quotient(var(a, i), var(a, i - 1)));
    factors.push_back(Expr::sum(std::move(terms)));
  }
  return factors;
}

ConstrainedModel grassmannian_hyperplane_system(int k, int n, std::span<const std::size_t> factor_indices) {
  const auto factors = grassmannian_hyperplane_factors(k, n);
  const NamedPolynomial g = grassmannian_polynomial(k, n);
  ConstrainedModel model;
  model.variables = g.variables;
  std::set<std::size_t> used;
  for (std::size_t i : factor_indices) {
    if (i >= factors.size()) throw InvalidArgument("hyperplane factor index " + std::to_string(i) + " out of range");
    if (!used.insert(i).second) throw InvalidArgument("hyperplane factor " + std::to_string(i) + " chosen twice");
    model.constraints.push_back(factors[i]);
  }
  model.potential = from_laurent(g.poly, g.variables);
  validate(model);
  return model;
}

ConstrainedModel grassmannian_hyperplane_system(int k, int n, int sections) {
  if (k < 1 || k >= n) throw InvalidArgument("invalid Grassmannian G(" + std::to_string(k) + "," + std::to_string(n) + ")");
  // One factor per Pluecker hyperplane class: N of them in total.
  if (sections < 0 || sections > n) {
    throw InvalidArgument("sections must lie in [0, " + std::to_string(n) + "], got " + std::to_string(sections));
  }
  std::vector<std::size_t> indices(static_cast<std::size_t>(sections));
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  return grassmannian_hyperplane_system(k, n, indices);
}

ConstrainedModel toric_complete_intersection_system(std::span<const Exponent> rays,
                                                    std::span<const std::vector<std::size_t>> subsets,
                                                    std::span<const std::string> names) {
  const auto checked = checked_rays(rays);
  const std::size_t n = checked.front().size();
  ConstrainedModel model;
  model.variables = names.empty() ? default_variable_names(n) : std::vector<std::string>(names.begin(), names.end());
  if (model.variables.size() != n) throw InvalidArgument("wrong number of variable names");

  for (const auto& subset : subsets) {
    if (subset.empty()) throw InvalidArgument("empty ray subset");
    std::vector<Term> terms;
    for (std::size_t i : subset) {
      if (i >= checked.size()) throw InvalidArgument("ray index " + std::to_string(i) + " out of range");
      terms.push_back(Term{checked[i], 1});
    }
    model.constraints.push_back(from_laurent(LaurentPolynomial(n, std::move(terms)), model.variables));
  }
  model.potential = from_laurent(toric_polynomial(checked), model.variables);
  validate(model);
  return model;
}

ConstrainedModel weighted_hypersurface_system(std::span<const int> weights, int degree, std::span<const int> partition) {
  if (weights.size() < 2) throw InvalidArgument("need at least two weights");
  int weight_sum = 0;
  for (int w : weights) {
    if (w < 1) throw InvalidArgument("weights must be positive");
    weight_sum += w;
  }
  if (degree < 1 || degree >= weight_sum) throw InvalidArgument("not Fano: degree must be below the weight sum");
  int part_sum = 0;
  for (int w : partition) part_sum += w;
  if (part_sum != degree) {
    throw InvalidArgument("partition sums to " + std::to_string(part_sum) + ", not to the degree " + std::to_string(degree));
  }

  std::vector<bool> chosen(weights.size(), false);
  for (int w : partition) {
    bool found = false;
    for (std::size_t i = weights.size(); i-- > 0;) {
      if (!chosen[i] && weights[i] == w) {
        chosen[i] = found = true;
        break;
      }
    }
    if (!found) throw InvalidArgument("partition weight " + std::to_string(w) + " is not available among the weights");
  }

  ConstrainedModel model;
  std::vector<Expr> monomial, linear, rest;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    model.variables.push_back("y" + std::to_string(i));
    Expr y = Expr::variable(model.variables.back());
    monomial.push_back(pow_expr(y, weights[i]));
    (chosen[i] ? linear : rest).push_back(y);
  }
  model.constraints = {Expr::product(std::move(monomial)), Expr::sum(std::move(linear))};
  model.potential = Expr::sum(std::move(rest));
  validate(model);
  return model;
}

Elimination eliminate(const ConstrainedModel& model, std::span<const PlanStep> plan) {
  validate(model);
  Bindings solutions;
  std::set<std::size_t> used_constraints;
  const std::set<std::string> declared(model.variables.begin(), model.variables.end());

  std::uint64_t seed = 0x5eed;
  for (const auto& step : plan) {
    const std::string& v = step.variable;
    if (step.constraint >= model.constraints.size()) {
      throw InvalidArgument("plan references constraint " + std::to_string(step.constraint) + " of " +
                            std::to_string(model.constraints.size()));
    }
    if (!used_constraints.insert(step.constraint).second) {
      throw InvalidArgument("plan uses constraint " + std::to_string(step.constraint) + " twice");
    }
    if (!declared.contains(v)) throw InvalidArgument("plan solves for undeclared variable '" + v + "'");
    if (solutions.contains(v)) throw InvalidArgument("plan references consumed variable '" + v + "'");

    const Expr constraint = substitute(model.constraints[step.constraint], solutions);
    const std::string where = "constraint " + std::to_string(step.constraint);
    if (!variables(constraint).contains(v)) throw InvalidArgument("variable '" + v + "' is absent from " + where);

    DegreeSplit split;
    try {
      split = split_by_degree(constraint, v);
    } catch (const NotLinear&) {
      throw InvalidArgument(where + " is not linear in '" + v + "'");
    }
    const Expr zero = Expr::constant(0);
    const Expr rest = split.contains(0) ? split.at(0) : zero;
    std::int64_t degree = 0;
    for (const auto& [d, coeff] : split) {
      if (d == 0) continue;
      if (degree != 0 || (d != 1 && d != -1)) throw InvalidArgument(where + " is not linear in '" + v + "'");
      degree = d;
    }
    if (degree == 0) throw InvalidArgument("variable '" + v + "' cancels out of " + where);
    const Expr& lead = split.at(degree);
    if (random_equal(lead, zero, 4, seed++).equal) {
      throw InvalidArgument("coefficient of '" + v + "' vanishes identically in " + where);
    }

    // lead * v + rest = 1, or lead / v + rest = 1.
    const Expr one_minus_rest = sub_expr(Expr::constant(1), rest);
    Expr solution = degree == 1 ? div_expr(one_minus_rest, lead) : div_expr(lead, one_minus_rest);

    for (auto& [name, value] : solutions) value = substitute(value, Bindings{{v, solution}});
    solutions.emplace(v, std::move(solution));
  }
  return Elimination{substitute(model.potential, solutions), std::move(solutions)};
}

}  // namespace lgm
