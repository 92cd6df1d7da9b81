#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lgm/expr.hpp"
#include "lgm/laurent.hpp"

namespace lgm {

/// A Laurent polynomial together with the names of its variables.
struct NamedPolynomial {
  LaurentPolynomial poly;
  std::vector<std::string> variables;
};

/// Landau-Ginzburg model cut out by equations `constraint == 1` inside a
/// torus, with a potential on it.
struct ConstrainedModel {
  std::vector<std::string> variables;
  std::vector<Expr> constraints;
  Expr potential = Expr::constant(0);
};

/// Throws InvalidArgument if a variable is undeclared or the model is not
/// positive-dimensional (constraint count must be below variable count).
void validate(const ConstrainedModel& model);

/// Substitutes into constraints and potential; bound variables are removed
/// from the declaration list and newly introduced ones appended (sorted).
ConstrainedModel substitute(const ConstrainedModel& model, const Bindings& bindings);

/// Sum of x^v over the ray generators of a fan. Rejects empty input,
/// rays of differing length and repeated rays.
LaurentPolynomial toric_polynomial(std::span<const Exponent> rays);

/// Hori-Vafa polynomial of a complete intersection of degrees k_1..k_r in
/// P^N:
///
///     prod_i (x_{i,1} + ... + x_{i,k_i-1} + 1)^{k_i} / (prod x_{i,j} * prod y_s)
///       + y_1 + ... + y_{k_0},          k_0 = N - sum k_i,
///
/// in N - r variables named x<i><j> then y<s>.
NamedPolynomial hori_vafa_ci(int ambient_dim, std::span<const int> degrees);

/// Mirror polynomial of G(k, N) on the (N-k) x k grid of variables X<a><b>:
///
///     X_{1,1} + sum_{a,b} (X_{a+1,b} + X_{a,b+1}) / X_{a,b} + 1 / X_{N-k,k}
///
/// with out-of-grid variables treated as 0.
NamedPolynomial grassmannian_polynomial(int k, int n);

/// The hyperplane-class summands of the Grassmannian polynomial, in the
/// order sections are consumed:
///   X11;
///   row transitions   sum_b X_{j+1,b}/X_{j,b},   j = 1..N-k-1;
///   1/X_{N-k,k};
///   column transitions sum_a X_{a,i}/X_{a,i-1},  i = 2..k.
/// Their sum is the Grassmannian polynomial.
std::vector<Expr> grassmannian_hyperplane_factors(int k, int n);

/// Linear sections of G(k, N): the first `sections` factors set equal to 1,
/// with the Grassmannian polynomial as potential. G(2,6) with 5 sections
/// gives the V14 system.
ConstrainedModel grassmannian_hyperplane_system(int k, int n, int sections);

/// Same, with an explicit choice of factors (indices into
/// grassmannian_hyperplane_factors).
ConstrainedModel grassmannian_hyperplane_system(int k, int n, std::span<const std::size_t> factor_indices);

/// General small-toric-degeneration recipe: for each subset of rays, the
/// constraint sum_{p in subset} x^p = 1; potential sum_i x^{v_i}.
ConstrainedModel toric_complete_intersection_system(std::span<const Exponent> rays,
                                                    std::span<const std::vector<std::size_t>> subsets,
                                                    std::span<const std::string> names = {});

/// Hori-Vafa system of a degree-d hypersurface in P(w_0 : ... : w_n):
///
///     y_0^{w_0} ... y_n^{w_n} = 1,   sum_{i in S} y_i = 1,   potential sum_{i not in S} y_i,
///
/// where S picks, for each weight in `partition`, the highest-index unused
/// variable of that weight. The potential drops sum_{i in S} y_i, which is
/// the constant 1 on the model.
ConstrainedModel weighted_hypersurface_system(std::span<const int> weights, int degree,
                                              std::span<const int> partition);

struct PlanStep {
  std::size_t constraint;
  std::string variable;
};

struct Elimination {
  Expr potential;
  // Each eliminated variable as an expression in the remaining ones.
  Bindings solutions;
};

/// Solves the planned constraints one at a time for their designated
/// variable and substitutes into the potential. A step's constraint, after
/// the earlier substitutions, must have the form A*v + B or A/v + B with A, B
/// free of v. Denominators are left as they are.
Elimination eliminate(const ConstrainedModel& model, std::span<const PlanStep> plan);

}  // namespace lgm
