#include "lgm/expr.hpp"

#include <cctype>
#include <limits>
#include <random>
#include <unordered_map>

#include "lgm/errors.hpp"

namespace lgm {

struct Expr::Node {
  Kind kind;
  std::string name;
  Integer value;
  std::int64_t exponent = 0;
  std::vector<Expr> children;
};

std::shared_ptr<Expr::Node> Expr::make_node(Kind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

Expr Expr::variable(std::string name) {
  auto n = make_node(Kind::Variable);
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::constant(Integer value) {
  auto n = make_node(Kind::Constant);
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) return constant(0);
  if (terms.size() == 1) return terms.front();
  auto n = make_node(Kind::Sum);
  n->children = std::move(terms);
  return Expr(std::move(n));
}

Expr Expr::difference(Expr lhs, Expr rhs) {
  auto n = make_node(Kind::Difference);
  n->children = {std::move(lhs), std::move(rhs)};
  return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) return constant(1);
  if (factors.size() == 1) return factors.front();
  auto n = make_node(Kind::Product);
  n->children = std::move(factors);
  return Expr(std::move(n));
}

Expr Expr::quotient(Expr numerator, Expr denominator) {
  auto n = make_node(Kind::Quotient);
  n->children = {std::move(numerator), std::move(denominator)};
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, std::int64_t exponent) {
  auto n = make_node(Kind::Power);
  n->exponent = exponent;
  n->children = {std::move(base)};
  return Expr(std::move(n));
}

Expr Expr::negate(Expr operand) {
  auto n = make_node(Kind::Negate);
  n->children = {std::move(operand)};
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const std::string& Expr::name() const { return node_->name; }
const Integer& Expr::value() const { return node_->value; }
std::int64_t Expr::exponent() const { return node_->exponent; }
std::span<const Expr> Expr::children() const { return node_->children; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::Variable:
      return a.name() == b.name();
    case Expr::Kind::Constant:
      return a.value() == b.value();
    case Expr::Kind::Power:
      if (a.exponent() != b.exponent()) return false;
      break;
    default:
      break;
  }
  const auto ca = a.children();
  const auto cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(ca[i] == cb[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr parse_expr() {
    Expr acc = parse_term();
    std::vector<Expr> run{acc};
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        run.push_back(parse_term());
      } else if (c == '-') {
        ++pos_;
        Expr lhs = Expr::sum(std::move(run));
        run = {Expr::difference(std::move(lhs), parse_term())};
      } else {
        break;
      }
    }
    return Expr::sum(std::move(run));
  }

  Expr parse_term() {
    std::vector<Expr> run{parse_factor()};
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        run.push_back(parse_factor());
      } else if (c == '/') {
        ++pos_;
        Expr lhs = Expr::product(std::move(run));
        run = {Expr::quotient(std::move(lhs), parse_factor())};
      } else {
        break;
      }
    }
    return Expr::product(std::move(run));
  }

  Expr parse_factor() {
    if (peek() == '-') {
      ++pos_;
      return Expr::negate(parse_factor());
    }
    Expr base = parse_atom();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer exponent");
    const std::size_t start = pos_;
    std::int64_t k = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (k > (std::numeric_limits<std::int32_t>::max() - 9) / 10) {
        pos_ = start;
        fail("exponent too large");
      }
      k = k * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return Expr::power(std::move(base), negative ? -k : k);
  }

  Expr parse_atom() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::constant(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::variable(std::string(text_.substr(start, pos_ - start)));
    }
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      if (peek() != ')') fail(pos_ < text_.size() ? "expected ')'" : "unexpected end of input");
      ++pos_;
      return inner;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render_into(const Expr& e, std::string& out);

bool is_additive(const Expr& e) { return e.kind() == Expr::Kind::Sum || e.kind() == Expr::Kind::Difference; }
bool is_multiplicative(const Expr& e) { return e.kind() == Expr::Kind::Product || e.kind() == Expr::Kind::Quotient; }

bool is_atom(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Variable:
    case Expr::Kind::Constant:  // negative constants render parenthesized
      return true;
    default:
      return false;
  }
}

void render_paren(const Expr& e, std::string& out) {
  out += '(';
  render_into(e, out);
  out += ')';
}

void render_atom(const Expr& e, std::string& out) {
  if (is_atom(e)) {
    render_into(e, out);
  } else {
    render_paren(e, out);
  }
}

// Operand of '*' or '/': anything but an additive or multiplicative node.
void render_factor(const Expr& e, std::string& out) {
  if (is_additive(e) || is_multiplicative(e)) {
    render_paren(e, out);
  } else {
    render_into(e, out);
  }
}

void render_into(const Expr& e, std::string& out) {
  const auto ch = e.children();
  switch (e.kind()) {
    case Expr::Kind::Variable:
      out += e.name();
      return;
    case Expr::Kind::Constant:
      if (e.value() < 0) {
        out += "(" + e.value().get_str() + ")";
      } else {
        out += e.value().get_str();
      }
      return;
    case Expr::Kind::Sum:
      for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i > 0) out += '+';
        // A leading difference re-parses as the same left-associated chain.
        if (is_additive(ch[i]) && !(i == 0 && ch[i].kind() == Expr::Kind::Difference)) {
          render_paren(ch[i], out);
        } else {
          render_into(ch[i], out);
        }
      }
      return;
    case Expr::Kind::Difference:
      render_into(ch[0], out);
      out += '-';
      if (is_additive(ch[1])) {
        render_paren(ch[1], out);
      } else {
        render_into(ch[1], out);
      }
      return;
    case Expr::Kind::Product:
      for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i > 0) out += '*';
        if (i == 0 && ch[i].kind() == Expr::Kind::Quotient) {
          render_into(ch[i], out);
        } else {
          render_factor(ch[i], out);
        }
      }
      return;
    case Expr::Kind::Quotient:
      if (is_multiplicative(ch[0])) {
        render_into(ch[0], out);
      } else {
        render_factor(ch[0], out);
      }
      out += '/';
      render_factor(ch[1], out);
      return;
    case Expr::Kind::Power:
      render_atom(ch[0], out);
      out += '^';
      out += std::to_string(e.exponent());
      return;
    case Expr::Kind::Negate:
      out += '-';
      if (ch[0].kind() == Expr::Kind::Power || ch[0].kind() == Expr::Kind::Negate) {
        render_into(ch[0], out);
      } else {
        render_atom(ch[0], out);
      }
      return;
  }
}

void collect_variables(const Expr& e, std::set<std::string>& out) {
  if (e.kind() == Expr::Kind::Variable) {
    out.insert(e.name());
    return;
  }
  for (const auto& c : e.children()) collect_variables(c, out);
}

}  // namespace

std::string render(const Expr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

std::set<std::string> variables(const Expr& e) {
  std::set<std::string> out;
  collect_variables(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Laurent conversion

namespace {

struct LaurentConverter {
  std::span<const std::string> order;
  std::size_t n;

  // Inverse of a unit monomial, or nullopt.
  static std::optional<LaurentPolynomial> unit_inverse(const LaurentPolynomial& p) {
    if (p.size() != 1) return std::nullopt;
    const Term& t = p.terms().front();
    if (abs(t.coeff) != 1) return std::nullopt;
    Exponent e = t.exponent;
    for (auto& k : e) k = -k;
    return LaurentPolynomial::monomial(std::move(e), t.coeff);
  }

  LaurentPolynomial invert(const Expr& denominator, const LaurentPolynomial& value) const {
    if (auto inv = unit_inverse(value)) return *inv;
    const std::string text = render(denominator);
    if (value.is_zero()) throw NotLaurentError("not Laurent: division by zero in " + text, text);
    throw NotLaurentError("not Laurent: non-monomial denominator " + text, text);
  }

  LaurentPolynomial convert(const Expr& e) const {
    const auto ch = e.children();
    switch (e.kind()) {
      case Expr::Kind::Variable: {
        for (std::size_t i = 0; i < n; ++i) {
          if (order[i] == e.name()) return LaurentPolynomial::variable(n, i);
        }
        throw InvalidArgument("unknown variable '" + e.name() + "'");
      }
      case Expr::Kind::Constant:
        return LaurentPolynomial::constant(n, e.value());
      case Expr::Kind::Sum: {
        LaurentPolynomial acc(n);
        for (const auto& c : ch) acc = add(acc, convert(c));
        return acc;
      }
      case Expr::Kind::Difference:
        return subtract(convert(ch[0]), convert(ch[1]));
      case Expr::Kind::Product: {
        LaurentPolynomial acc = LaurentPolynomial::constant(n, 1);
        for (const auto& c : ch) acc = multiply(acc, convert(c));
        return acc;
      }
      case Expr::Kind::Quotient:
        return multiply(convert(ch[0]), invert(ch[1], convert(ch[1])));
      case Expr::Kind::Power: {
        LaurentPolynomial base = convert(ch[0]);
        const std::int64_t k = e.exponent();
        if (k < 0) base = invert(ch[0], base);
        return power(base, static_cast<unsigned>(k < 0 ? -k : k));
      }
      case Expr::Kind::Negate:
        return negate(convert(ch[0]));
    }
    throw Error("unreachable expression kind");
  }
};

}  // namespace

LaurentPolynomial to_laurent(const Expr& e, std::span<const std::string> variable_order) {
  return LaurentConverter{variable_order, variable_order.size()}.convert(e);
}

Expr from_laurent(const LaurentPolynomial& f, std::span<const std::string> names) {
  if (names.size() != f.nvars()) throw InvalidArgument("wrong number of variable names");
  std::vector<Expr> terms;
  for (const auto& t : f.terms()) {
    std::vector<Expr> factors;
    const Integer magnitude = abs(t.coeff);
    if (magnitude != 1) factors.push_back(Expr::constant(magnitude));
    for (std::size_t c = 0; c < f.nvars(); ++c) {
      const auto k = t.exponent[c];
      if (k == 0) continue;
      Expr v = Expr::variable(names[c]);
      factors.push_back(k == 1 ? v : Expr::power(v, k));
    }
    Expr mono = factors.empty() ? Expr::constant(1) : Expr::product(std::move(factors));
    terms.push_back(t.coeff < 0 ? Expr::negate(mono) : mono);
  }
  return Expr::sum(std::move(terms));
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

bool all_constant(const std::vector<Expr>& v) {
  for (const auto& e : v) {
    if (!e.is_constant()) return false;
  }
  return true;
}

Expr fold(Expr::Kind kind, std::vector<Expr> ch, std::int64_t exponent) {
  using K = Expr::Kind;
  if (all_constant(ch)) {
    switch (kind) {
      case K::Sum: {
        Integer acc = 0;
        for (const auto& c : ch) acc += c.value();
        return Expr::constant(acc);
      }
      case K::Difference:
        return Expr::constant(ch[0].value() - ch[1].value());
      case K::Product: {
        Integer acc = 1;
        for (const auto& c : ch) acc *= c.value();
        return Expr::constant(acc);
      }
      case K::Quotient:
        if (ch[1].value() != 0 && mpz_divisible_p(ch[0].value().get_mpz_t(), ch[1].value().get_mpz_t())) {
          return Expr::constant(ch[0].value() / ch[1].value());
        }
        break;
      case K::Power:
        if (exponent >= 0) {
          Integer r;
          mpz_pow_ui(r.get_mpz_t(), ch[0].value().get_mpz_t(), static_cast<unsigned long>(exponent));
          return Expr::constant(r);
        }
        if (abs(ch[0].value()) == 1) return Expr::constant(-exponent % 2 == 0 ? Integer(1) : ch[0].value());
        break;
      case K::Negate:
        return Expr::constant(-ch[0].value());
      default:
        break;
    }
  }
  // Partial folding: merge constant operands and drop neutral elements.
  if (kind == K::Sum || kind == K::Product) {
    const Integer neutral = kind == K::Sum ? 0 : 1;
    Integer acc = neutral;
    std::vector<Expr> rest;
    for (auto& c : ch) {
      if (!c.is_constant()) {
        rest.push_back(std::move(c));
      } else if (kind == K::Sum) {
        acc += c.value();
      } else {
        acc *= c.value();
      }
    }
    if (kind == K::Product && acc == 0) return Expr::constant(0);
    if (acc != neutral) rest.insert(kind == K::Sum ? rest.end() : rest.begin(), Expr::constant(acc));
    ch = std::move(rest);
  }
  switch (kind) {
    case K::Sum:
      return Expr::sum(std::move(ch));
    case K::Difference:
      if (ch[1].is_constant(0)) return ch[0];
      return Expr::difference(ch[0], ch[1]);
    case K::Product:
      return Expr::product(std::move(ch));
    case K::Quotient:
      if (ch[1].is_constant(1)) return ch[0];
      return Expr::quotient(ch[0], ch[1]);
    case K::Power:
      if (exponent == 1) return ch[0];
      if (exponent == 0) return Expr::constant(1);
      return Expr::power(ch[0], exponent);
    case K::Negate:
      return Expr::negate(ch[0]);
    default:
      throw Error("fold on a leaf");
  }
}

struct Substituter {
  const Bindings& bindings;
  std::unordered_map<const void*, Expr> memo;

  Expr run(const Expr& e) {
    if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
    Expr out = e;
    if (e.kind() == Expr::Kind::Variable) {
      if (auto b = bindings.find(e.name()); b != bindings.end()) out = b->second;
    } else if (e.kind() != Expr::Kind::Constant) {
      std::vector<Expr> ch;
      bool changed = false;
      for (const auto& c : e.children()) {
        ch.push_back(run(c));
        changed = changed || ch.back().id() != c.id();
      }
      if (changed || all_constant(ch)) out = fold(e.kind(), std::move(ch), e.exponent());
    }
    memo.emplace(e.id(), out);
    return out;
  }
};

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) {
  Substituter s{bindings, {}};
  return s.run(e);
}

// ---------------------------------------------------------------------------
// Modular evaluation and identity testing

namespace {

struct Evaluator {
  const std::map<std::string, std::uint64_t>& point;
  std::uint64_t p;
  std::unordered_map<const void*, std::optional<std::uint64_t>> memo;

  std::optional<std::uint64_t> run(const Expr& e) {
    if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
    auto v = compute(e);
    memo.emplace(e.id(), v);
    return v;
  }

  std::optional<std::uint64_t> compute(const Expr& e) {
    const auto ch = e.children();
    switch (e.kind()) {
      case Expr::Kind::Variable: {
        auto it = point.find(e.name());
        if (it == point.end()) throw InvalidArgument("no value for variable '" + e.name() + "'");
        return it->second % p;
      }
      case Expr::Kind::Constant:
        return modp::reduce(e.value(), p);
      case Expr::Kind::Sum: {
        std::uint64_t acc = 0;
        for (const auto& c : ch) {
          auto v = run(c);
          if (!v) return std::nullopt;
          acc = (acc + *v) % p;
        }
        return acc;
      }
      case Expr::Kind::Difference: {
        auto a = run(ch[0]);
        auto b = run(ch[1]);
        if (!a || !b) return std::nullopt;
        return (*a + p - *b) % p;
      }
      case Expr::Kind::Product: {
        std::uint64_t acc = 1 % p;
        for (const auto& c : ch) {
          auto v = run(c);
          if (!v) return std::nullopt;
          acc = modp::mul(acc, *v, p);
        }
        return acc;
      }
      case Expr::Kind::Quotient: {
        auto a = run(ch[0]);
        auto b = run(ch[1]);
        if (!a || !b || *b == 0) return std::nullopt;
        return modp::mul(*a, modp::inverse(*b, p), p);
      }
      case Expr::Kind::Power: {
        auto b = run(ch[0]);
        if (!b) return std::nullopt;
        const std::int64_t k = e.exponent();
        if (k >= 0) return modp::pow(*b, static_cast<std::uint64_t>(k), p);
        if (*b == 0) return std::nullopt;
        return modp::pow(modp::inverse(*b, p), static_cast<std::uint64_t>(-k), p);
      }
      case Expr::Kind::Negate: {
        auto a = run(ch[0]);
        if (!a) return std::nullopt;
        return (p - *a) % p;
      }
    }
    return std::nullopt;
  }
};

// Uniform draw from [1, p-1] for p = 2^61 - 1.
std::uint64_t draw_nonzero(std::mt19937_64& gen) {
  for (;;) {
    const std::uint64_t r = gen() >> 3;
    if (r != 0 && r < kIdentityPrime) return r;
  }
}

}  // namespace

std::optional<std::uint64_t> evaluate_mod(const Expr& e, const std::map<std::string, std::uint64_t>& point,
                                          std::uint64_t p) {
  Evaluator ev{point, p, {}};
  return ev.run(e);
}

IdentityResult random_equal(const Expr& lhs, const Expr& rhs, unsigned trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("identity test needs at least one trial");
  std::set<std::string> names = variables(lhs);
  names.merge(variables(rhs));

  std::mt19937_64 gen(seed);
  IdentityResult result;
  const unsigned budget = trials * 16 + 64;
  for (unsigned attempt = 0; attempt < budget; ++attempt) {
    std::map<std::string, std::uint64_t> point;
    for (const auto& n : names) point[n] = draw_nonzero(gen);
    const auto a = evaluate_mod(lhs, point, kIdentityPrime);
    const auto b = evaluate_mod(rhs, point, kIdentityPrime);
    if (!a || !b) {
      ++result.discarded;
      continue;
    }
    if (*a != *b) {
      result.equal = false;
      result.witness = std::move(point);
      result.lhs_value = *a;
      result.rhs_value = *b;
      return result;
    }
    if (++result.trials == trials) {
      result.equal = true;
      return result;
    }
  }
  throw BudgetExceeded("identity test: too many points with a zero denominator (" +
                       std::to_string(result.discarded) + " discarded)");
}

}  // namespace lgm
