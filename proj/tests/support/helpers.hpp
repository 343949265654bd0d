#pragma once

#include <string>

#include "vaisman/gen_section.hpp"
#include "vaisman/parser.hpp"
#include "vaisman/random.hpp"

namespace testing {

inline vaisman::Poly P(const std::string& src, std::size_t dim) {
  return vaisman::parse_poly(src, vaisman::DoubledSpace(dim));
}

/// Section from component strings, vector part first.
inline vaisman::GenSection S(std::size_t dim, const std::vector<std::string>& vec,
                             const std::vector<std::string>& form) {
  std::vector<vaisman::Poly> v;
  std::vector<vaisman::Poly> f;
  for (const auto& s : vec) v.push_back(P(s, dim));
  for (const auto& s : form) f.push_back(P(s, dim));
  return vaisman::GenSection(std::move(v), std::move(f));
}

inline vaisman::RandomPolyOptions options(std::uint32_t degree, bool tilde_free) {
  vaisman::RandomPolyOptions o;
  o.max_degree = degree;
  o.tilde_free = tilde_free;
  return o;
}

}  // namespace testing
