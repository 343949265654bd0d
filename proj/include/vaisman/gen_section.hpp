#pragma once

#include <string>
#include <vector>

#include "vaisman/poly.hpp"

namespace vaisman {

/// Generalized section e = X + xi of the doubled bundle.
///
/// `vec()` holds the components X^mu, `form()` the components xi_mu. The
/// form half is identified with the tilde directions, so in O(D,D) index
/// notation e^M = (X^mu, xi_mu) with derivative d_M = (d_mu, dt^mu).
class GenSection {
 public:
  explicit GenSection(DoubledSpace space);
  GenSection(std::vector<Poly> vec, std::vector<Poly> form);

  static GenSection zero(DoubledSpace space) { return GenSection(space); }

  const DoubledSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  const std::vector<Poly>& vec() const { return vec_; }
  const std::vector<Poly>& form() const { return form_; }
  /// 0-based vector/form component.
  const Poly& vec(std::size_t mu) const { return vec_.at(mu); }
  const Poly& form(std::size_t mu) const { return form_.at(mu); }
  Poly& vec(std::size_t mu) { return vec_.at(mu); }
  Poly& form(std::size_t mu) { return form_.at(mu); }

  /// O(D,D) component M in 0..2D-1: vector slots first, then form slots.
  const Poly& component(std::size_t m) const;
  Poly& component(std::size_t m);

  bool is_zero() const;

  GenSection& operator+=(const GenSection& other);
  GenSection& operator-=(const GenSection& other);
  GenSection& operator*=(const Rational& c);
  GenSection& operator*=(const Poly& f);

  friend GenSection operator+(GenSection a, const GenSection& b) { return a += b; }
  friend GenSection operator-(GenSection a, const GenSection& b) { return a -= b; }
  friend GenSection operator*(GenSection a, const Rational& c) { return a *= c; }
  friend GenSection operator*(const Rational& c, GenSection a) { return a *= c; }
  friend GenSection operator*(const Poly& f, GenSection a) { return a *= f; }
  GenSection operator-() const;

  friend bool operator==(const GenSection&, const GenSection&) = default;

  std::string to_string() const;

 private:
  void require_same_space(const GenSection& other) const;

  DoubledSpace space_;
  std::vector<Poly> vec_;
  std::vector<Poly> form_;
};

/// Drops every tilde-dependent monomial from every component.
GenSection strong_constraint_project(const GenSection& e);

}  // namespace vaisman
