#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vaisman/calculus.hpp"
#include "vaisman/jet.hpp"

namespace vaisman {

using SectionJet = Jet<GenSection>;
using FunctionJet = Jet<Poly>;

/// exp(ad A) B = sum_k ad(A)^k B / k!, with ad extended bilinearly over
/// series coefficients. A must have no constant term, so the sum stops at
/// the truncation order.
SectionJet exp_ad_series(BracketKind kind, const SectionJet& a, const SectionJet& b);
/// exp(rho(A)) F with the anchor of `kind`.
FunctionJet exp_anchor_series(BracketKind kind, const SectionJet& a, const FunctionJet& f);

/// sum_{k<=N} t^k/k! ad(e1)^k e2.
SectionJet exp_ad(BracketKind kind, const GenSection& e1, const GenSection& e2,
                  std::uint32_t order);
/// sum_{k<=N} t^k/k! rho(e)^k f with the doubled anchor.
FunctionJet exp_anchor(const GenSection& e, const Poly& f, std::uint32_t order);
FunctionJet exp_anchor(BracketKind kind, const GenSection& e, const Poly& f,
                       std::uint32_t order);

/// Which formal rack identity to test. `self_distributive_sections` and
/// `self_distributive_functions` use two parameters (t for e1, s for e2);
/// the other two use t only.
enum class RackIdentity {
  self_distributive_sections = 1,   // e1 > (e2 > e3) = (e1 > e2) > (e1 > e3)
  self_distributive_functions = 2,  // e1 > (e2 > f) = (e1 > e2) > (e1 > f)
  module_compatibility = 3,         // e1 > (f e2) = (e1 > f)(e1 > e2)
  metric_compatibility = 4,         // e1 > (e2, e3) = (e1 > e2, e1 > e3)
};

struct GradedReport {
  RackIdentity identity;
  BracketKind kind;
  std::uint32_t order;
  /// LHS - RHS, graded by bidegree in (t, s).
  std::variant<SectionJet, FunctionJet> residual;
  /// Lowest total degree with a nonzero coefficient; empty means the
  /// identity holds through `order`.
  std::optional<std::uint32_t> lowest_failing_degree;
  std::vector<Bidegree> nonzero_bidegrees;

  bool holds() const { return !lowest_failing_degree.has_value(); }
};

/// Residual series of one of the four formal rack identities, truncated at
/// total degree `order` (>= 2). Unused inputs (e3 for identities 2-3, f for
/// identities 1 and 4) are ignored.
GradedReport check_formal_rack_identity(BracketKind kind, RackIdentity identity,
                                        const GenSection& e1, const GenSection& e2,
                                        const GenSection& e3, const Poly& f,
                                        std::uint32_t order);

/// Finite-dimensional Leibniz algebra over Q with [e_i, e_j] = c^k_ij e_k.
class LeibnizAlgebra {
 public:
  using Element = std::vector<Rational>;

  /// constants[i][j][k] = c^k_ij. Throws if the left Leibniz identity fails
  /// on some basis triple.
  explicit LeibnizAlgebra(std::vector<std::vector<Element>> constants);

  std::size_t dim() const { return dim_; }
  Element bracket(const Element& x, const Element& y) const;
  Element basis(std::size_t i) const;

  /// Length of the series g, [g,g]+..., terminating at zero; empty when the
  /// algebra is not nilpotent.
  std::optional<std::size_t> nilpotency_index() const { return nilpotency_; }

  /// exp(ad x) y as an exact finite sum. Throws std::domain_error on a
  /// non-nilpotent algebra; use `exp_ad_truncated` there.
  Element exp_ad_exact(const Element& x, const Element& y) const;
  Element exp_ad_truncated(const Element& x, const Element& y, std::uint32_t order) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<Element>> constants_;
  std::optional<std::size_t> nilpotency_;
};

/// The 2-dimensional algebra with [x, x] = y and all other brackets zero.
LeibnizAlgebra nilpotent_leibniz_2d();
/// The 3-dimensional Heisenberg Lie algebra [x, y] = -[y, x] = z.
LeibnizAlgebra heisenberg_3d();
/// The non-nilpotent Lie algebra [x, y] = -[y, x] = y.
LeibnizAlgebra affine_2d();

std::string to_string(RackIdentity id);

}  // namespace vaisman
