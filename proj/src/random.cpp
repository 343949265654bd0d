#include "vaisman/random.hpp"

#include <limits>
#include <stdexcept>

namespace vaisman {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return lo + static_cast<std::int64_t>(draw % span);
}

bool Rng::chance(std::uint32_t numerator, std::uint32_t denominator) {
  return uniform(0, static_cast<std::int64_t>(denominator) - 1) < numerator;
}

Poly random_poly(Rng& rng, DoubledSpace space, const RandomPolyOptions& opts) {
  Poly out(space);
  if (rng.chance(opts.zero_chance_percent, 100)) return out;
  const auto terms = rng.uniform(1, opts.max_terms);
  const std::size_t active = opts.tilde_free ? space.dim() : space.doubled_dim();
  for (std::int64_t t = 0; t < terms; ++t) {
    Exponents e(space.doubled_dim(), 0);
    const auto degree = rng.uniform(0, opts.max_degree);
    for (std::int64_t k = 0; k < degree; ++k) {
      e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(active) - 1))] += 1;
    }
    std::int64_t c = 0;
    while (c == 0) c = rng.uniform(-opts.coeff_bound, opts.coeff_bound);
    out += Poly::monomial(space, std::move(e), Rational(static_cast<long>(c)));
  }
  return out;
}

GenSection random_section(Rng& rng, DoubledSpace space, const RandomPolyOptions& opts) {
  GenSection out(space);
  for (std::size_t mu = 0; mu < space.dim(); ++mu) out.vec(mu) = random_poly(rng, space, opts);
  for (std::size_t mu = 0; mu < space.dim(); ++mu) out.form(mu) = random_poly(rng, space, opts);
  return out;
}

}  // namespace vaisman
