#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vaisman {

using Rational = mpq_class;

/// Raised when two values built over different doubled spaces are combined.
class SpaceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which half of the doubled coordinates a coordinate or derivative refers to.
enum class Sector { plain, tilde };

/// Flat doubled space with coordinates x1..xD and xt1..xtD.
///
/// The split (x, xt) is fixed; the constant O(D,D) metric pairs slot mu of the
/// plain half with slot mu of the tilde half.
class DoubledSpace {
 public:
  explicit DoubledSpace(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t doubled_dim() const { return 2 * dim_; }

  /// Flat slot of a coordinate in an exponent vector; index is 1-based.
  std::size_t slot(Sector sector, std::size_t index) const;
  std::string coordinate_name(std::size_t slot) const;

  friend bool operator==(const DoubledSpace&, const DoubledSpace&) = default;

 private:
  std::size_t dim_;
};

using Exponents = std::vector<std::uint32_t>;

/// Graded-lexicographic order, descending: higher total degree first, then
/// lexicographically larger exponent vectors (x1 > x2 > ... > xt1 > ...).
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Exact-rational multivariate polynomial over the 2D doubled coordinates.
///
/// Terms are kept in canonical order with no zero coefficients, so equality
/// is structural.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  explicit Poly(DoubledSpace space) : space_(space) {}

  static Poly constant(DoubledSpace space, const Rational& c);
  static Poly coordinate(DoubledSpace space, Sector sector, std::size_t index);
  static Poly monomial(DoubledSpace space, Exponents exps, const Rational& c);

  const DoubledSpace& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;

  std::uint32_t total_degree() const;
  /// Largest total degree in the tilde half over all terms.
  std::uint32_t tilde_degree() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  Poly pow(std::uint32_t exponent) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  /// Renders in the text grammar accepted by `parse_poly`.
  std::string to_string() const;

 private:
  void add_term(const Exponents& exps, const Rational& c);
  void require_same_space(const Poly& other) const;

  DoubledSpace space_;
  TermMap terms_;
};

/// Formal partial derivative d/dx_index (plain) or d/dxt_index (tilde).
Poly partial(const Poly& p, Sector sector, std::size_t index);

/// Drops every monomial with positive tilde degree.
Poly strong_constraint_project(const Poly& p);

enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

std::string rational_to_string(const Rational& q);

}  // namespace vaisman
