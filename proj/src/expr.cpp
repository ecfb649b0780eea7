#include "benford/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace benford {

ExprPtr make_dist(DistributionSpec spec) {
  validate(spec);
  return std::make_shared<const ProcessExpr>(ProcessExpr{DistLeaf{std::move(spec)}});
}
ExprPtr make_const(double value) {
  return std::make_shared<const ProcessExpr>(ProcessExpr{Const{value}});
}
ExprPtr make_var(std::string name) {
  return std::make_shared<const ProcessExpr>(ProcessExpr{VarRef{std::move(name)}});
}
ExprPtr make_let(std::string name, ExprPtr bound, ExprPtr body) {
  return std::make_shared<const ProcessExpr>(
      ProcessExpr{Let{std::move(name), std::move(bound), std::move(body)}});
}
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const ProcessExpr>(ProcessExpr{Binary{op, std::move(lhs), std::move(rhs)}});
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  ExprPtr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  ExprPtr expr() {
    auto lhs = term();
    for (;;) {
      if (consume('+')) {
        lhs = make_binary(BinaryOp::Add, lhs, term());
      } else if (consume('-')) {
        lhs = make_binary(BinaryOp::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    auto lhs = power();
    for (;;) {
      if (consume('*')) {
        lhs = make_binary(BinaryOp::Mul, lhs, power());
      } else if (consume('/')) {
        lhs = make_binary(BinaryOp::Div, lhs, power());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr power() {
    if (consume('-')) {
      auto operand = power();
      if (const auto* c = std::get_if<Const>(&operand->node)) return make_const(-c->value);
      return make_binary(BinaryOp::Sub, make_const(0.0), operand);
    }
    auto base = atom();
    if (consume('^')) return make_binary(BinaryOp::Pow, base, power());  // right-associative
    return base;
  }

  ExprPtr atom() {
    const char c = peek();
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident_or_dist_or_let();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  ExprPtr number() {
    skip_ws();
    const std::size_t start = pos_;
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) throw ParseError("malformed number", start);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return make_const(value);
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected identifier", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr ident_or_dist_or_let() {
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "let") return let_binding();
    if (peek() == '(') return distribution(name, start);
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (*it == name) return make_var(name);
    }
    throw UnboundVariable(name, start);
  }

  ExprPtr let_binding() {
    const std::string name = identifier();
    expect('=');
    auto bound = expr();
    expect(';');
    scope_.push_back(name);
    auto body = expr();
    scope_.pop_back();
    return make_let(name, std::move(bound), std::move(body));
  }

  double number_arg() {
    skip_ws();
    bool neg = false;
    if (consume('-')) neg = true;
    auto e = number();
    const double v = std::get<Const>(e->node).value;
    return neg ? -v : v;
  }

  std::int64_t integer_arg() {
    const std::size_t at = pos_;
    const double v = number_arg();
    if (v != std::floor(v)) throw ParseError("expected an integer argument", at);
    return static_cast<std::int64_t>(v);
  }

  ExprPtr distribution(const std::string& name, std::size_t start) {
    expect('(');
    DistributionSpec spec;
    if (name == "U") {
      const double a = number_arg();
      expect(',');
      spec = UniformCont{a, number_arg()};
    } else if (name == "UD") {
      const std::int64_t lo = integer_arg();
      expect(',');
      spec = UniformDisc{lo, integer_arg()};
    } else if (name == "N") {
      const double m = number_arg();
      expect(',');
      spec = Normal{m, number_arg()};
    } else if (name == "E") {
      spec = Exponential{number_arg()};
    } else if (name == "LN") {
      const double shape = number_arg();
      expect(',');
      spec = Lognormal{shape, number_arg()};
    } else if (name == "TRI") {
      const double a = number_arg();
      expect(',');
      const double c = number_arg();
      expect(',');
      spec = Triangular{a, c, number_arg()};
    } else if (name == "KX") {
      const double a = number_arg();
      expect(',');
      spec = Reciprocal{a, number_arg()};
    } else if (name == "DICE") {
      spec = Dice{integer_arg()};
    } else if (name == "EMP") {
      if (!options_.empirical_values || options_.empirical_values->empty()) {
        throw ParseError("EMP() needs an empirical value set supplied out-of-band", start);
      }
      spec = Empirical{options_.empirical_values};
    } else {
      throw ParseError("unknown distribution '" + name + "'", start);
    }
    expect(')');
    try {
      validate(spec);
    } catch (const InvalidSpec& e) {
      throw ParseError(e.what(), start);
    }
    return make_dist(std::move(spec));
  }
};

}  // namespace

ExprPtr parse_expr(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).parse();
}

// ---------------------------------------------------------------------------
// Binding validation
// ---------------------------------------------------------------------------

namespace {

void check_bindings(const ProcessExpr& e, std::vector<const std::string*>& scope) {
  if (const auto* v = std::get_if<VarRef>(&e.node)) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (**it == v->name) return;
    }
    throw UnboundVariable(v->name, 0);
  }
  if (const auto* l = std::get_if<Let>(&e.node)) {
    check_bindings(*l->bound, scope);
    scope.push_back(&l->name);
    check_bindings(*l->body, scope);
    scope.pop_back();
    return;
  }
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    check_bindings(*b->lhs, scope);
    check_bindings(*b->rhs, scope);
  }
}

}  // namespace

void validate_bindings(const ProcessExpr& expr) {
  std::vector<const std::string*> scope;
  check_bindings(expr, scope);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

const char* op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return " + ";
    case BinaryOp::Sub: return " - ";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Pow: return "^";
  }
  return "?";
}

int precedence(const ProcessExpr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    switch (b->op) {
      case BinaryOp::Add:
      case BinaryOp::Sub: return 1;
      case BinaryOp::Mul:
      case BinaryOp::Div: return 2;
      case BinaryOp::Pow: return 3;
    }
  }
  if (std::holds_alternative<Let>(e.node)) return 0;
  return 4;
}

void print(const ProcessExpr& e, std::ostringstream& os) {
  if (const auto* d = std::get_if<DistLeaf>(&e.node)) {
    os << to_string(d->spec);
  } else if (const auto* c = std::get_if<Const>(&e.node)) {
    std::ostringstream tmp;
    tmp.precision(15);
    tmp << c->value;
    os << tmp.str();
  } else if (const auto* v = std::get_if<VarRef>(&e.node)) {
    os << v->name;
  } else if (const auto* l = std::get_if<Let>(&e.node)) {
    os << "let " << l->name << " = ";
    print(*l->bound, os);
    os << "; ";
    print(*l->body, os);
  } else if (const auto* b = std::get_if<Binary>(&e.node)) {
    const int my = precedence(e);
    auto child = [&](const ProcessExpr& sub, bool right) {
      const int theirs = precedence(sub);
      const bool parens = theirs < my || (theirs == my && right && b->op != BinaryOp::Pow);
      if (parens) os << "(";
      print(sub, os);
      if (parens) os << ")";
    };
    child(*b->lhs, false);
    os << op_symbol(b->op);
    child(*b->rhs, true);
  }
}

}  // namespace

std::string to_string(const ProcessExpr& expr) {
  std::ostringstream os;
  print(expr, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Realization
// ---------------------------------------------------------------------------

namespace {

struct Env {
  const Env* parent = nullptr;
  const std::string* name = nullptr;
  double value = 0.0;
};

double eval(const ProcessExpr& e, RngStream& rng, const Env* env) {
  if (const auto* d = std::get_if<DistLeaf>(&e.node)) return sample(d->spec, rng);
  if (const auto* c = std::get_if<Const>(&e.node)) return c->value;
  if (const auto* v = std::get_if<VarRef>(&e.node)) {
    for (const Env* scope = env; scope != nullptr; scope = scope->parent) {
      if (*scope->name == v->name) return scope->value;
    }
    throw std::logic_error("unbound variable escaped validation: " + v->name);
  }
  if (const auto* l = std::get_if<Let>(&e.node)) {
    const Env inner{env, &l->name, eval(*l->bound, rng, env)};
    return eval(*l->body, rng, &inner);
  }
  const auto& b = std::get<Binary>(e.node);
  const double lhs = eval(*b.lhs, rng, env);
  const double rhs = eval(*b.rhs, rng, env);
  switch (b.op) {
    case BinaryOp::Add: return lhs + rhs;
    case BinaryOp::Sub: return lhs - rhs;
    case BinaryOp::Mul: return lhs * rhs;
    case BinaryOp::Div:
      if (rhs == 0.0) throw RealizeDomainError("division by exact zero");
      return lhs / rhs;
    case BinaryOp::Pow:
      if (lhs < 0.0 && rhs != std::floor(rhs)) {
        throw RealizeDomainError("non-integer power of a negative base");
      }
      if (lhs == 0.0 && rhs < 0.0) throw RealizeDomainError("negative power of zero");
      return std::pow(lhs, rhs);
  }
  throw std::logic_error("unhandled operator");
}

}  // namespace

double realize(const ProcessExpr& expr, RngStream& rng) { return eval(expr, rng, nullptr); }

// ---------------------------------------------------------------------------
// Theoretical POM via interval propagation
// ---------------------------------------------------------------------------

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Non-negative interval; hi may be +inf once a division by a zero-minimum
// interval has occurred.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct Unsound {};  // negative values entered the analysis

struct IntervalEnv {
  const IntervalEnv* parent = nullptr;
  const std::string* name = nullptr;
  Interval value;
};

bool has_unbounded_leaf(const ProcessExpr& e) {
  if (const auto* d = std::get_if<DistLeaf>(&e.node)) return !theoretical_support(d->spec).bounded;
  if (const auto* l = std::get_if<Let>(&e.node)) {
    return has_unbounded_leaf(*l->bound) || has_unbounded_leaf(*l->body);
  }
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    return has_unbounded_leaf(*b->lhs) || has_unbounded_leaf(*b->rhs);
  }
  return false;
}

double mul_bound(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;  // 0 * inf counts as 0 here
  return a * b;
}

Interval propagate(const ProcessExpr& e, const IntervalEnv* env) {
  if (const auto* d = std::get_if<DistLeaf>(&e.node)) {
    const Support s = theoretical_support(d->spec);
    if (s.lo < 0.0) throw Unsound{};
    return {s.lo, s.hi};
  }
  if (const auto* c = std::get_if<Const>(&e.node)) {
    if (c->value < 0.0) throw Unsound{};
    return {c->value, c->value};
  }
  if (const auto* v = std::get_if<VarRef>(&e.node)) {
    for (const IntervalEnv* scope = env; scope != nullptr; scope = scope->parent) {
      if (*scope->name == v->name) return scope->value;
    }
    throw Unsound{};
  }
  if (const auto* l = std::get_if<Let>(&e.node)) {
    const IntervalEnv inner{env, &l->name, propagate(*l->bound, env)};
    return propagate(*l->body, &inner);
  }
  const auto& b = std::get<Binary>(e.node);
  const Interval x = propagate(*b.lhs, env);
  const Interval y = propagate(*b.rhs, env);
  switch (b.op) {
    case BinaryOp::Add: return {x.lo + y.lo, x.hi + y.hi};
    case BinaryOp::Sub: {
      const Interval r{x.lo - y.hi, x.hi - y.lo};
      if (r.lo < 0.0) throw Unsound{};
      return r;
    }
    case BinaryOp::Mul: return {mul_bound(x.lo, y.lo), mul_bound(x.hi, y.hi)};
    case BinaryOp::Div: {
      if (y.hi == 0.0) throw Unsound{};  // division by exactly zero everywhere
      const double lo = (y.hi == kInf) ? 0.0 : x.lo / y.hi;
      const double hi = (y.lo == 0.0) ? (x.hi == 0.0 ? 0.0 : kInf) : x.hi / y.lo;
      return {lo, hi};
    }
    case BinaryOp::Pow: {
      // Endpoints of x^y over the box; monotone in each argument on the
      // non-negative base domain, so corners suffice.
      const double corners[4] = {std::pow(x.lo, y.lo), std::pow(x.lo, y.hi),
                                 std::pow(x.hi, y.lo), std::pow(x.hi, y.hi)};
      Interval r{kInf, 0.0};
      for (const double c : corners) {
        if (std::isnan(c)) throw Unsound{};
        r.lo = std::min(r.lo, c);
        r.hi = std::max(r.hi, c);
      }
      return r;
    }
  }
  throw Unsound{};
}

}  // namespace

PomAnalysis theoretical_pom(const ProcessExpr& expr) {
  if (has_unbounded_leaf(expr)) return PomAnalysis::unbounded();
  try {
    const Interval iv = propagate(expr, nullptr);
    if (iv.lo == 0.0 && iv.hi == 0.0) return PomAnalysis::unavailable();  // constant zero
    if (iv.lo == 0.0 || iv.hi == kInf) return PomAnalysis::unbounded();
    return PomAnalysis::of(iv.hi / iv.lo);
  } catch (const Unsound&) {
    return PomAnalysis::unavailable();
  }
}

}  // namespace benford
