#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vaisman/poly.hpp"

namespace vaisman {

/// Syntax or semantic error in a polynomial expression; `position` is the
/// 0-based character offset where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses an arithmetic expression over x<k>/xt<k>, rational literals,
/// + - * / ^ and parentheses, and returns the expanded canonical polynomial.
///
/// Exponents must be unsigned integer literals. Division is only allowed by
/// nonzero constants. Juxtaposition multiplies (`3x1` == `3*x1`).
Poly parse_poly(std::string_view src, DoubledSpace space);

}  // namespace vaisman
