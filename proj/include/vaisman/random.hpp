#pragma once

#include <cstdint>
#include <random>

#include "vaisman/gen_section.hpp"

namespace vaisman {

/// Reproducible generator for randomized sweeps.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling on the raw 64-bit output
/// instead of std::uniform_int_distribution (whose algorithm is
/// implementation-defined), so a seed gives the same stream on every
/// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint32_t numerator, std::uint32_t denominator);

 private:
  std::mt19937_64 engine_;
};

struct RandomPolyOptions {
  std::uint32_t max_degree = 2;
  bool tilde_free = false;
  std::uint32_t max_terms = 3;
  std::int64_t coeff_bound = 3;  // nonzero integer coefficients in [-bound, bound]
  std::uint32_t zero_chance_percent = 15;
};

Poly random_poly(Rng& rng, DoubledSpace space, const RandomPolyOptions& opts);
GenSection random_section(Rng& rng, DoubledSpace space, const RandomPolyOptions& opts);

}  // namespace vaisman
