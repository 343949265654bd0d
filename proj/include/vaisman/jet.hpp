#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vaisman/poly.hpp"

namespace vaisman {

/// Exponents (i, j) of the monomial t^i s^j in the formal parameters.
struct Bidegree {
  std::uint32_t t = 0;
  std::uint32_t s = 0;

  std::uint32_t total() const { return t + s; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Truncated power series in two formal parameters (t, s) with coefficients
/// of type T (Poly or GenSection). Coefficients above total degree `order`
/// are dropped on every operation.
template <class T>
class Jet {
 public:
  Jet(std::uint32_t order, T zero) : order_(order), zero_(std::move(zero)) {}

  static Jet constant(std::uint32_t order, T value, T zero) {
    Jet out(order, std::move(zero));
    out.set({0, 0}, std::move(value));
    return out;
  }

  std::uint32_t order() const { return order_; }
  const T& zero_value() const { return zero_; }
  const std::map<Bidegree, T>& coefficients() const { return coeffs_; }

  const T& coefficient(Bidegree d) const {
    const auto it = coeffs_.find(d);
    return it == coeffs_.end() ? zero_ : it->second;
  }

  void set(Bidegree d, T value) {
    if (d.total() > order_) return;
    if (value.is_zero()) {
      coeffs_.erase(d);
    } else {
      coeffs_.insert_or_assign(d, std::move(value));
    }
  }

  void accumulate(Bidegree d, const T& value) {
    if (d.total() > order_ || value.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(d, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool has_constant_term() const { return coeffs_.contains(Bidegree{0, 0}); }

  /// Lowest total degree carrying a nonzero coefficient.
  std::optional<std::uint32_t> lowest_degree() const {
    std::optional<std::uint32_t> best;
    for (const auto& [d, c] : coeffs_) {
      if (!best || d.total() < *best) best = d.total();
    }
    return best;
  }

  Jet& operator+=(const Jet& other) {
    for (const auto& [d, c] : other.coeffs_) accumulate(d, c);
    return *this;
  }
  Jet& operator-=(const Jet& other) {
    for (const auto& [d, c] : other.coeffs_) accumulate(d, -c);
    return *this;
  }
  Jet& operator*=(const Rational& q) {
    if (sgn(q) == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [d, c] : coeffs_) c *= q;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Rational& q) { return a *= q; }

  /// Multiplies by t^shift.t s^shift.s.
  Jet shifted(Bidegree shift) const {
    Jet out(order_, zero_);
    for (const auto& [d, c] : coeffs_) out.set({d.t + shift.t, d.s + shift.s}, c);
    return out;
  }

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::uint32_t order_;
  T zero_;
  std::map<Bidegree, T> coeffs_;
};

/// Truncated Cauchy product of two series under a bilinear coefficient map.
template <class A, class B, class F>
auto cauchy_product(const Jet<A>& a, const Jet<B>& b, F&& bilinear, std::uint32_t order)
    -> Jet<decltype(bilinear(a.zero_value(), b.zero_value()))> {
  using R = decltype(bilinear(a.zero_value(), b.zero_value()));
  Jet<R> out(order, bilinear(a.zero_value(), b.zero_value()));
  for (const auto& [da, ca] : a.coefficients()) {
    for (const auto& [db, cb] : b.coefficients()) {
      const Bidegree d{da.t + db.t, da.s + db.s};
      if (d.total() > order) continue;
      out.accumulate(d, bilinear(ca, cb));
    }
  }
  return out;
}

}  // namespace vaisman
