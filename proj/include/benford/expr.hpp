#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "benford/distribution.hpp"
#include "benford/rng.hpp"

namespace benford {

struct ProcessExpr;
using ExprPtr = std::shared_ptr<const ProcessExpr>;

// Node variants. Every DistLeaf occurrence denotes an independent draw per
// realization; reusing one draw is expressed only through Let.
struct DistLeaf {
  DistributionSpec spec;
};
struct Const {
  double value;
};
struct VarRef {
  std::string name;
};
struct Let {
  std::string name;
  ExprPtr bound;
  ExprPtr body;
};
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct ProcessExpr {
  std::variant<DistLeaf, Const, VarRef, Let, Binary> node;
};

// Builders for programmatic construction.
ExprPtr make_dist(DistributionSpec spec);
ExprPtr make_const(double value);
ExprPtr make_var(std::string name);
ExprPtr make_let(std::string name, ExprPtr bound, ExprPtr body);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct UnboundVariable : ParseError {
  UnboundVariable(const std::string& name, std::size_t position)
      : ParseError("unbound variable '" + name + "'", position), name(name) {}
  std::string name;
};

struct ParseOptions {
  // Values backing EMP() leaves; the DSL carries no file paths itself.
  std::shared_ptr<const std::vector<double>> empirical_values;
};

// Grammar (precedence ^ over * / over + -, ^ right-associative):
//   expr := term (("+"|"-") term)*
//   term := pw (("*"|"/") pw)*
//   pw   := "-" pw | atom ("^" pw)?
//   atom := NUMBER | dist | ident | "(" expr ")" | "let" ident "=" expr ";" expr
//   dist := ("U"|"UD"|"N"|"E"|"LN"|"TRI"|"KX"|"DICE"|"EMP") "(" args ")"
ExprPtr parse_expr(std::string_view text, const ParseOptions& options = {});

// Throws UnboundVariable if any VarRef escapes its Let scope.
void validate_bindings(const ProcessExpr& expr);

std::string to_string(const ProcessExpr& expr);

// Raised inside realize() for point singularities (division by exact zero,
// non-integer power of a negative base); callers redraw the realization.
struct RealizeDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One realization: every DistLeaf draws fresh from the stream, Let binds its
// value once, operands evaluate left before right.
double realize(const ProcessExpr& expr, RngStream& rng);

struct PomAnalysis {
  enum class Kind { Value, Unbounded, Unavailable };
  Kind kind = Kind::Unavailable;
  double value = 0.0;  // meaningful only when kind == Value

  static PomAnalysis of(double v) { return {Kind::Value, v}; }
  static PomAnalysis unbounded() { return {Kind::Unbounded, 0.0}; }
  static PomAnalysis unavailable() { return {Kind::Unavailable, 0.0}; }
};

// Interval-style support propagation: products multiply endpoints, sums add
// them. Unbounded when any leaf has infinite support or a zero minimum makes
// max/min infinite; unavailable when negative values enter the analysis
// (endpoint propagation is unsound there). Let-sharing is propagated as if
// independent, which can only overestimate the range.
PomAnalysis theoretical_pom(const ProcessExpr& expr);

}  // namespace benford
