#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>
#include <vector>

#include "benford/expr.hpp"
#include "benford/metrics.hpp"

using namespace benford;

namespace {

double realize_once(const std::string& text, std::uint64_t seed = 1, std::uint64_t idx = 0) {
  RngStream rng(seed, idx);
  return realize(*parse_expr(text), rng);
}

}  // namespace

TEST_CASE("parse builds the expected tree shapes") {
  const auto e = parse_expr("U(3,40)*U(2,33)");
  const auto* mul = std::get_if<Binary>(&e->node);
  REQUIRE(mul != nullptr);
  CHECK(mul->op == BinaryOp::Mul);
  CHECK(std::holds_alternative<DistLeaf>(mul->lhs->node));
  CHECK(std::holds_alternative<DistLeaf>(mul->rhs->node));

  // ^ binds tighter than *
  const auto rp = parse_expr("U(1,10) * U(1,10)^UD(1,300)");
  const auto* top = std::get_if<Binary>(&rp->node);
  REQUIRE(top != nullptr);
  CHECK(top->op == BinaryOp::Mul);
  const auto* pow_node = std::get_if<Binary>(&top->rhs->node);
  REQUIRE(pow_node != nullptr);
  CHECK(pow_node->op == BinaryOp::Pow);

  const auto let_expr = parse_expr("let v = U(0,50); v*v/(2*(U(0,10)/U(0,5)))");
  const auto* let_node = std::get_if<Let>(&let_expr->node);
  REQUIRE(let_node != nullptr);
  CHECK(let_node->name == "v");
  CHECK(std::holds_alternative<DistLeaf>(let_node->bound->node));
}

TEST_CASE("arithmetic precedence and associativity") {
  CHECK(realize_once("2+3*4") == 14.0);
  CHECK(realize_once("(2+3)*4") == 20.0);
  CHECK(realize_once("2^3^2") == 512.0);  // right-associative
  CHECK(realize_once("-2^2") == -4.0);
  CHECK(realize_once("7") == 7.0);
  CHECK(realize_once("10^0.5") == doctest::Approx(std::sqrt(10.0)));
  CHECK(realize_once("8/2/2") == 2.0);  // left-associative
  CHECK(realize_once("10-2-3") == 5.0);
}

TEST_CASE("degenerate stochastic expressions") {
  for (std::uint64_t idx = 0; idx < 20; ++idx) {
    CHECK(realize_once("let v=U(2,2); v*v", 1, idx) == 4.0);
    CHECK(realize_once("U(5,5)+U(3,3)", 1, idx) == 8.0);
  }
}

TEST_CASE("unbound variables are rejected at parse time") {
  CHECK_THROWS_AS(parse_expr("v*2"), UnboundVariable);
  CHECK_THROWS_AS(parse_expr("let v = 2; v + w"), UnboundVariable);
  // a let variable does not escape its body
  CHECK_THROWS_AS(parse_expr("(let v = 2; v) + v"), UnboundVariable);
  CHECK_NOTHROW(parse_expr("let v = 2; let w = v; v*w"));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_expr("U(3,)"), ParseError);
  CHECK_THROWS_AS(parse_expr("2 +"), ParseError);
  CHECK_THROWS_AS(parse_expr("FOO(1)"), ParseError);
  CHECK_THROWS_AS(parse_expr("1 2"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("U(4,3)"), ParseError);    // invalid parameters
  CHECK_THROWS_AS(parse_expr("UD(1.5,3)"), ParseError); // integer argument required
  try {
    parse_expr("U(1,2) @ U(3,4)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 7);
  }
}

TEST_CASE("EMP needs out-of-band values") {
  CHECK_THROWS_AS(parse_expr("EMP()"), ParseError);
  ParseOptions opt;
  opt.empirical_values = std::make_shared<std::vector<double>>(std::vector<double>{2.0, 4.0, 8.0});
  const auto e = parse_expr("EMP()", opt);
  RngStream rng(1, 0);
  for (int i = 0; i < 50; ++i) {
    const double v = realize(*e, rng);
    CHECK((v == 2.0 || v == 4.0 || v == 8.0));
  }
}

TEST_CASE("domain errors: zero divisors and bad powers") {
  RngStream rng(1, 0);
  CHECK_THROWS_AS(realize(*parse_expr("1/0"), rng), RealizeDomainError);
  CHECK_THROWS_AS(realize(*parse_expr("(0-2)^0.5"), rng), RealizeDomainError);
  CHECK_THROWS_AS(realize(*parse_expr("0^(0-1)"), rng), RealizeDomainError);
  CHECK(realize(*parse_expr("(0-2)^3"), rng) == -8.0);
}

TEST_CASE("realization is deterministic per stream") {
  const auto e = parse_expr("U(3,40)*U(2,33)+N(5,2)");
  for (std::uint64_t idx : {0ULL, 1ULL, 17ULL}) {
    RngStream a(77, idx), b(77, idx);
    CHECK(realize(*e, a) == realize(*e, b));
  }
}

TEST_CASE("independent occurrences versus let-shared reuse") {
  // Two independent draws multiplied vs one draw squared. The distributions
  // differ: extreme products need two simultaneous extremes, so the
  // independent product's empirical max/min ratio sits strictly below the
  // shared square's.
  const auto indep = parse_expr("U(5,33)*U(5,33)");
  const auto shared = parse_expr("let v=U(5,33); v*v");
  const int n = 35000;
  std::vector<double> vi, vs;
  for (int r = 0; r < n; ++r) {
    RngStream a(1, static_cast<std::uint64_t>(r));
    RngStream b(1, static_cast<std::uint64_t>(r));
    vi.push_back(realize(*indep, a));
    vs.push_back(realize(*shared, b));
  }
  const double pom_indep = empirical_pom(vi).value;
  const double pom_shared = empirical_pom(vs).value;
  CHECK(pom_shared > pom_indep);
  CHECK(pom_shared > pom_indep * 1.01);  // not a rounding fluke
  // and the shared square never draws the two factors apart
  for (int r = 0; r < 100; ++r) {
    RngStream b(1, static_cast<std::uint64_t>(r));
    const double v = realize(*shared, b);
    CHECK(std::sqrt(v) >= 5.0);
    CHECK(std::sqrt(v) <= 33.0);
  }
}

TEST_CASE("printing round-trips through the parser") {
  const std::vector<std::string> cases = {
      "U(3,40)*U(2,33)*U(7,41)*U(1,29)",
      "let v = U(0,50); v*v/(2*(U(0,10)/U(0,5)))",
      "U(1,10)*U(1,10)^UD(1,300)",
      "LN(1.5,3.8) + LN(1.3,4)",
      "10^U(0,1)",
      "U(6,75)+U(3,37)+U(5,55)+U(2,35)",
      "2^3^2",
      "U(1,2)*(U(3,4)+U(5,6))",
  };
  for (const auto& text : cases) {
    const auto once = parse_expr(text);
    const std::string printed = to_string(*once);
    const auto twice = parse_expr(printed);
    CHECK(to_string(*twice) == printed);
    // identical realization stream-for-stream proves structural equality
    RngStream a(5, 9), b(5, 9);
    CHECK(realize(*once, a) == realize(*twice, b));
  }
}

TEST_CASE("theoretical pom: products, sums, unbounded, unavailable") {
  auto pom_of = [](const std::string& text) { return theoretical_pom(*parse_expr(text)); };

  const auto prod = pom_of("U(6,75)*U(3,37)*U(5,55)*U(2,35)");
  REQUIRE(prod.kind == PomAnalysis::Kind::Value);
  CHECK(prod.value == doctest::Approx(5341875.0 / 180.0).epsilon(1e-12));
  CHECK(std::fabs(prod.value - 29677.0) < 1.0);

  const auto sum = pom_of("U(6,75)+U(3,37)+U(5,55)+U(2,35)");
  REQUIRE(sum.kind == PomAnalysis::Kind::Value);
  CHECK(sum.value == doctest::Approx(12.625).epsilon(1e-12));

  CHECK(pom_of("N(0,1)*U(1,2)").kind == PomAnalysis::Kind::Unbounded);
  CHECK(pom_of("E(3)+U(1,2)").kind == PomAnalysis::Kind::Unbounded);
  CHECK(pom_of("U(0,1)*U(0,100)").kind == PomAnalysis::Kind::Unbounded);  // zero minimum
  CHECK(pom_of("U(1,2)/U(0,3)").kind == PomAnalysis::Kind::Unbounded);

  CHECK(pom_of("U(1,2)-U(1,2)").kind == PomAnalysis::Kind::Unavailable);  // crosses zero
  CHECK(pom_of("0-U(1,2)").kind == PomAnalysis::Kind::Unavailable);       // negative values

  CHECK(pom_of("U(5,5)").value == doctest::Approx(1.0));
  CHECK(pom_of("2*U(1,10)").value == doctest::Approx(10.0));
  CHECK(pom_of("U(1,10)^2").value == doctest::Approx(100.0));
  CHECK(pom_of("10^U(0,1)").value == doctest::Approx(10.0));

  // Let-sharing propagates as if independent and may only overestimate:
  // v/v is exactly 1, the interval answer is 4.
  const auto shared = pom_of("let v = U(1,2); v/v");
  REQUIRE(shared.kind == PomAnalysis::Kind::Value);
  CHECK(shared.value == doctest::Approx(4.0));
}

TEST_CASE("oom additivity under products") {
  const std::vector<std::string> factors = {"U(3,40)", "U(2,33)", "U(7,41)", "U(1,29)"};
  double oom_sum = 0.0;
  std::string product;
  for (const auto& f : factors) {
    oom_sum += std::log10(theoretical_pom(*parse_expr(f)).value);
    product = product.empty() ? f : product + "*" + f;
  }
  const auto combined = theoretical_pom(*parse_expr(product));
  REQUIRE(combined.kind == PomAnalysis::Kind::Value);
  CHECK(std::log10(combined.value) == doctest::Approx(oom_sum).epsilon(1e-12));
}

TEST_CASE("the distributive rule is never applied") {
  // X*(A+B) and X*A + X*B are different processes: the left draws one
  // multiplier per realization, the right draws two.
  const auto factored = parse_expr("U(1,2)*(U(1,9)+U(1,9))");
  const auto expanded = parse_expr("U(1,2)*U(1,9)+U(1,2)*U(1,9)");
  CHECK(to_string(*factored) != to_string(*expanded));

  int differing = 0;
  for (std::uint64_t r = 0; r < 200; ++r) {
    RngStream a(3, r), b(3, r);
    if (realize(*factored, a) != realize(*expanded, b)) ++differing;
  }
  CHECK(differing > 190);
}

TEST_CASE("programmatic builders validate bindings on demand") {
  const auto dangling = make_binary(BinaryOp::Mul, make_var("x"), make_const(2.0));
  CHECK_THROWS_AS(validate_bindings(*dangling), UnboundVariable);
  const auto bound = make_let("x", make_const(3.0), dangling);
  CHECK_NOTHROW(validate_bindings(*bound));
  RngStream rng(1, 0);
  CHECK(realize(*bound, rng) == 6.0);
}
