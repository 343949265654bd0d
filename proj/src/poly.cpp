#include "vaisman/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vaisman {

DoubledSpace::DoubledSpace(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("doubled space dimension must be >= 1");
}

std::size_t DoubledSpace::slot(Sector sector, std::size_t index) const {
  if (index < 1 || index > dim_) {
    throw std::out_of_range("coordinate index " + std::to_string(index) +
                            " out of range 1.." + std::to_string(dim_));
  }
  return sector == Sector::plain ? index - 1 : dim_ + index - 1;
}

std::string DoubledSpace::coordinate_name(std::size_t slot) const {
  if (slot < dim_) return "x" + std::to_string(slot + 1);
  return "xt" + std::to_string(slot - dim_ + 1);
}

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(DoubledSpace space, const Rational& c) {
  Poly p(space);
  p.add_term(Exponents(space.doubled_dim(), 0), c);
  return p;
}

Poly Poly::coordinate(DoubledSpace space, Sector sector, std::size_t index) {
  Exponents e(space.doubled_dim(), 0);
  e[space.slot(sector, index)] = 1;
  return monomial(space, std::move(e), Rational(1));
}

Poly Poly::monomial(DoubledSpace space, Exponents exps, const Rational& c) {
  if (exps.size() != space.doubled_dim()) {
    throw std::invalid_argument("exponent vector has wrong length");
  }
  Poly p(space);
  p.add_term(exps, c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

Rational Poly::constant_term() const {
  const auto it = terms_.find(Exponents(space_.doubled_dim(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Poly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;  // grlex: first term has top degree
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::uint32_t Poly::tilde_degree() const {
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_) {
    best = std::max(best, std::accumulate(e.begin() + static_cast<std::ptrdiff_t>(space_.dim()),
                                          e.end(), std::uint32_t{0}));
  }
  return best;
}

void Poly::add_term(const Exponents& exps, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::require_same_space(const Poly& other) const {
  if (!(space_ == other.space_)) {
    throw SpaceMismatch("polynomials over doubled spaces of different dimension (" +
                        std::to_string(space_.dim()) + " vs " +
                        std::to_string(other.space_.dim()) + ")");
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_space(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_space(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_space(b);
  Poly out(a.space_);
  Exponents e(a.space_.doubled_dim());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::pow(std::uint32_t exponent) const {
  Poly result = constant(space_, Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    const bool unit = mag == 1;
    if (!unit) {
      out << rational_to_string(mag);
      wrote = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (wrote) out << '*';
      out << space_.coordinate_name(k);
      if (e[k] > 1) out << '^' << e[k];
      wrote = true;
    }
    if (!wrote) out << '1';
  }
  return out.str();
}

Poly partial(const Poly& p, Sector sector, std::size_t index) {
  const std::size_t k = p.space().slot(sector, index);
  Poly out(p.space());
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponents d = e;
    d[k] -= 1;
    out += Poly::monomial(p.space(), std::move(d), c * e[k]);
  }
  return out;
}

Poly strong_constraint_project(const Poly& p) {
  const std::size_t dim = p.space().dim();
  Poly out(p.space());
  for (const auto& [e, c] : p.terms()) {
    const bool tilde_free =
        std::all_of(e.begin() + static_cast<std::ptrdiff_t>(dim), e.end(),
                    [](auto v) { return v == 0; });
    if (tilde_free) out += Poly::monomial(p.space(), e, c);
  }
  return out;
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

}  // namespace vaisman
