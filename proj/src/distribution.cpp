#include "benford/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace benford {

namespace {

void fail(const std::string& what) { throw InvalidSpec(what); }

struct Validator {
  void operator()(const UniformCont& d) const {
    if (!(d.a <= d.b)) fail("UniformCont requires a <= b");
  }
  void operator()(const UniformDisc& d) const {
    if (d.lo > d.hi) fail("UniformDisc requires lo <= hi");
  }
  void operator()(const Normal& d) const {
    if (!(d.sd > 0.0)) fail("Normal requires sd > 0");
  }
  void operator()(const Exponential& d) const {
    if (!(d.scale > 0.0)) fail("Exponential requires scale > 0");
  }
  void operator()(const Lognormal& d) const {
    if (!(d.shape >= 0.0)) fail("Lognormal requires shape >= 0");
  }
  void operator()(const Triangular& d) const {
    if (!(d.a <= d.c && d.c <= d.b)) fail("Triangular requires a <= c <= b");
  }
  void operator()(const Reciprocal& d) const {
    if (!(d.a > 0.0 && d.b > d.a)) fail("Reciprocal requires 0 < a < b");
  }
  void operator()(const Empirical& d) const {
    if (!d.values || d.values->empty()) fail("Empirical requires a non-empty value set");
  }
  void operator()(const Dice& d) const {
    if (d.faces < 1) fail("Dice requires faces >= 1");
  }
};

double sample_normal(double mean, double sd, RngStream& rng) {
  // Box-Muller; consumes exactly two uniforms per draw.
  const double u1 = rng.next_open();
  const double u2 = rng.next_double();
  return mean + sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

struct Sampler {
  RngStream& rng;

  double operator()(const UniformCont& d) const {
    if (d.a == d.b) return d.a;
    return d.a + rng.next_double() * (d.b - d.a);
  }
  double operator()(const UniformDisc& d) const {
    return static_cast<double>(rng.next_int(d.lo, d.hi));
  }
  double operator()(const Normal& d) const { return sample_normal(d.mean, d.sd, rng); }
  double operator()(const Exponential& d) const { return -d.scale * std::log(rng.next_open()); }
  double operator()(const Lognormal& d) const {
    if (d.shape == 0.0) return std::exp(d.location);
    return std::exp(sample_normal(d.location, d.shape, rng));
  }
  double operator()(const Triangular& d) const {
    if (d.a == d.b) return d.a;
    const double u = rng.next_double();
    const double cut = (d.c - d.a) / (d.b - d.a);
    if (u < cut) return d.a + std::sqrt(u * (d.b - d.a) * (d.c - d.a));
    return d.b - std::sqrt((1.0 - u) * (d.b - d.a) * (d.b - d.c));
  }
  double operator()(const Reciprocal& d) const {
    return d.a * std::pow(d.b / d.a, rng.next_double());
  }
  double operator()(const Empirical& d) const {
    const auto& v = *d.values;
    return v[static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(v.size()) - 1))];
  }
  double operator()(const Dice& d) const { return static_cast<double>(rng.next_int(1, d.faces)); }
};

struct SupportVisitor {
  Support operator()(const UniformCont& d) const { return {true, d.a, d.b}; }
  Support operator()(const UniformDisc& d) const {
    return {true, static_cast<double>(d.lo), static_cast<double>(d.hi)};
  }
  Support operator()(const Normal&) const { return {false, 0.0, 0.0}; }
  Support operator()(const Exponential&) const { return {false, 0.0, 0.0}; }
  Support operator()(const Lognormal& d) const {
    if (d.shape == 0.0) {
      const double v = std::exp(d.location);
      return {true, v, v};
    }
    return {false, 0.0, 0.0};
  }
  Support operator()(const Triangular& d) const { return {true, d.a, d.b}; }
  Support operator()(const Reciprocal& d) const { return {true, d.a, d.b}; }
  Support operator()(const Empirical& d) const {
    const auto [mn, mx] = std::minmax_element(d.values->begin(), d.values->end());
    return {true, *mn, *mx};
  }
  Support operator()(const Dice& d) const { return {true, 1.0, static_cast<double>(d.faces)}; }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

struct Printer {
  std::string operator()(const UniformCont& d) const {
    return "U(" + num(d.a) + "," + num(d.b) + ")";
  }
  std::string operator()(const UniformDisc& d) const {
    return "UD(" + std::to_string(d.lo) + "," + std::to_string(d.hi) + ")";
  }
  std::string operator()(const Normal& d) const {
    return "N(" + num(d.mean) + "," + num(d.sd) + ")";
  }
  std::string operator()(const Exponential& d) const { return "E(" + num(d.scale) + ")"; }
  std::string operator()(const Lognormal& d) const {
    return "LN(" + num(d.shape) + "," + num(d.location) + ")";
  }
  std::string operator()(const Triangular& d) const {
    return "TRI(" + num(d.a) + "," + num(d.c) + "," + num(d.b) + ")";
  }
  std::string operator()(const Reciprocal& d) const {
    return "KX(" + num(d.a) + "," + num(d.b) + ")";
  }
  std::string operator()(const Empirical& d) const {
    return "EMP(#" + std::to_string(d.values ? d.values->size() : 0) + ")";
  }
  std::string operator()(const Dice& d) const { return "DICE(" + std::to_string(d.faces) + ")"; }
};

}  // namespace

void validate(const DistributionSpec& spec) { std::visit(Validator{}, spec); }

double sample(const DistributionSpec& spec, RngStream& rng) {
  validate(spec);
  return std::visit(Sampler{rng}, spec);
}

Support theoretical_support(const DistributionSpec& spec) {
  return std::visit(SupportVisitor{}, spec);
}

std::string to_string(const DistributionSpec& spec) { return std::visit(Printer{}, spec); }

}  // namespace benford
