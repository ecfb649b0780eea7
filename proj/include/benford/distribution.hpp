#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "benford/rng.hpp"

namespace benford {

struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Primitive sampler families. Parameter conventions:
//   Exponential::scale is the mean, not the rate.
//   Lognormal(shape, location) = exp(Normal(mean = location, sd = shape)).
//   Reciprocal has density proportional to 1/x on (a, b).
struct UniformCont {
  double a, b;
};
struct UniformDisc {
  std::int64_t lo, hi;  // inclusive, equiprobable
};
struct Normal {
  double mean, sd;
};
struct Exponential {
  double scale;
};
struct Lognormal {
  double shape, location;
};
struct Triangular {
  double a, c, b;  // c is the mode
};
struct Reciprocal {
  double a, b;
};
struct Empirical {
  std::shared_ptr<const std::vector<double>> values;  // uniform pick with replacement
};
struct Dice {
  std::int64_t faces;  // alias for UniformDisc(1, faces)
};

using DistributionSpec = std::variant<UniformCont, UniformDisc, Normal, Exponential, Lognormal,
                                      Triangular, Reciprocal, Empirical, Dice>;

// Throws InvalidSpec when a family's parameter invariants fail.
void validate(const DistributionSpec& spec);

// One pseudorandom realization. Bounded families use inverse-CDF transforms,
// Normal uses Box-Muller; every family consumes the stream deterministically.
double sample(const DistributionSpec& spec, RngStream& rng);

struct Support {
  bool bounded = false;
  double lo = 0.0;
  double hi = 0.0;  // endpoints are meaningful only when bounded
};

// Exact support endpoints for bounded families; unbounded marker for
// Normal, Exponential and Lognormal with shape > 0.
Support theoretical_support(const DistributionSpec& spec);

std::string to_string(const DistributionSpec& spec);

}  // namespace benford
