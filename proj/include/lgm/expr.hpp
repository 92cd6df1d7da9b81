#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgm/laurent.hpp"

namespace lgm {

/// Immutable rational expression tree over named variables and integer
/// constants. Copies share structure.
///
/// Grammar of the text form (whitespace-insensitive):
///
///     expr   := term (('+'|'-') term)*
///     term   := factor (('*'|'/') factor)*
///     factor := atom ['^' ['-'] integer]
///     atom   := integer | name | '(' expr ')' | '-' atom
///     name   := letter (letter|digit)*
///
/// Note that unary minus belongs to `atom`, so "-x^2" is (-x)^2.
class Expr {
 public:
  enum class Kind { Variable, Constant, Sum, Difference, Product, Quotient, Power, Negate };

  static Expr variable(std::string name);
  static Expr constant(Integer value);
  static Expr sum(std::vector<Expr> terms);
  static Expr difference(Expr lhs, Expr rhs);
  static Expr product(std::vector<Expr> factors);
  static Expr quotient(Expr numerator, Expr denominator);
  static Expr power(Expr base, std::int64_t exponent);
  static Expr negate(Expr operand);

  Kind kind() const;
  const std::string& name() const;     // Variable only
  const Integer& value() const;        // Constant only
  std::int64_t exponent() const;       // Power only
  std::span<const Expr> children() const;

  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_constant(long v) const { return is_constant() && value() == v; }

  // Identity of the shared node; used to memoize evaluation over DAGs.
  const void* id() const { return node_.get(); }

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  static std::shared_ptr<Node> make_node(Kind kind);
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Bindings = std::map<std::string, Expr>;

/// Parses the grammar above. Throws ParseError carrying the byte offset.
Expr parse(std::string_view text);

/// Text form that parses back to the same tree.
std::string render(const Expr& e);

/// Variable names occurring in e.
std::set<std::string> variables(const Expr& e);

/// Fully expanded Laurent polynomial over the given variable order. Every
/// denominator must reduce to a monomial with coefficient +-1; otherwise
/// NotLaurentError names the offending subexpression.
LaurentPolynomial to_laurent(const Expr& e, std::span<const std::string> variable_order);

/// Sum of monomials, the inverse of to_laurent up to tree shape.
Expr from_laurent(const LaurentPolynomial& f, std::span<const std::string> names);

/// Simultaneous substitution. Subtrees built only from integer constants are
/// folded (exact quotients only), constant operands of sums and products are
/// merged, and x^1, x/1, x-0 collapse to x. Nothing else is simplified.
Expr substitute(const Expr& e, const Bindings& bindings);

/// Value in Z/pZ, or nullopt if a zero denominator (or zero base with a
/// negative exponent) is hit. Throws InvalidArgument on unbound variables.
std::optional<std::uint64_t> evaluate_mod(const Expr& e, const std::map<std::string, std::uint64_t>& point,
                                          std::uint64_t p);

/// Prime field used for randomized identity testing: 2^61 - 1.
inline constexpr std::uint64_t kIdentityPrime = (std::uint64_t{1} << 61) - 1;

struct IdentityResult {
  bool equal = false;
  unsigned trials = 0;     // agreeing evaluations performed
  unsigned discarded = 0;  // points redrawn because a side was undefined
  // Populated when equal is false.
  std::map<std::string, std::uint64_t> witness;
  std::uint64_t lhs_value = 0;
  std::uint64_t rhs_value = 0;
};

/// Schwartz-Zippel identity test over Z/(2^61-1) with a seeded
/// deterministic generator. Points where either side is undefined are
/// redrawn; throws BudgetExceeded if too many are. A false "equal" per
/// trial has probability at most (total degree)/(p-1).
IdentityResult random_equal(const Expr& lhs, const Expr& rhs, unsigned trials, std::uint64_t seed);

}  // namespace lgm
