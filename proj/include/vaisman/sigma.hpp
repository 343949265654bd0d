#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vaisman/gen_section.hpp"
#include "vaisman/poly.hpp"

namespace vaisman::sigma {

using VarId = std::uint32_t;

/// Polynomial in lattice field variables. A monomial is the sorted multiset
/// of its variable ids.
class FieldPoly {
 public:
  using Monomial = std::vector<VarId>;
  using TermMap = std::map<Monomial, Rational>;

  FieldPoly() = default;
  static FieldPoly constant(const Rational& c);
  static FieldPoly variable(VarId v, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t degree() const;
  Rational constant_term() const;
  /// Coefficient of the degree-1 monomial of `v`.
  Rational linear_coefficient(VarId v) const;
  /// Variables that occur in some term, ascending.
  std::vector<VarId> variables() const;

  FieldPoly derivative(VarId v) const;

  void add_term(Monomial m, const Rational& c);

  FieldPoly& operator+=(const FieldPoly& other);
  FieldPoly& operator-=(const FieldPoly& other);
  FieldPoly& operator*=(const Rational& c);
  friend FieldPoly operator+(FieldPoly a, const FieldPoly& b) { return a += b; }
  friend FieldPoly operator-(FieldPoly a, const FieldPoly& b) { return a -= b; }
  friend FieldPoly operator*(FieldPoly a, const Rational& c) { return a *= c; }
  friend FieldPoly operator*(const Rational& c, FieldPoly a) { return a *= c; }
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  FieldPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const FieldPoly&, const FieldPoly&) = default;

 private:
  TermMap terms_;
};

enum class Model { standard_courant, doubled };

std::string to_string(Model m);
/// Accepts "courant" and "doubled".
Model parse_model(const std::string& name);

enum class FieldKind { phi, b, a, c };

/// One canonical field variable at one site.
///
/// `index` is the target index (i in 1..D for the Courant model, I in 1..2D
/// for the doubled model); `form` is the worldsheet index a in {1, 2} for A
/// and C and 0 otherwise. B carries the single component B_12.
struct Variable {
  FieldKind kind;
  std::size_t index;
  std::size_t form;
  std::size_t site;
  std::string label;
};

/// Periodic L1 x L2 grid of canonical field variables.
///
/// Sites are numbered x * L2 + y. The canonical brackets are
/// {phi^i(p), B_12,j(q)} = -delta^i_j delta_pq / Delta and
/// {A^i_a(p), C_b,j(q)} = eps_ab delta^i_j delta_pq / Delta for the Courant
/// model, and {A_aI(p), A_bJ(q)} = eps_ab eta_IJ delta_pq / Delta for the
/// doubled model, where Delta = h1 h2 is the cell area.
class LatticePhaseSpace {
 public:
  LatticePhaseSpace(Model model, std::size_t dim, std::size_t l1, std::size_t l2,
                    Rational h1 = 1, Rational h2 = 1);

  Model model() const { return model_; }
  std::size_t dim() const { return dim_; }
  /// Number of target indices: D for the Courant model, 2D for the doubled.
  std::size_t target_dim() const;
  std::size_t l1() const { return l1_; }
  std::size_t l2() const { return l2_; }
  std::size_t sites() const { return l1_ * l2_; }
  const Rational& spacing(std::size_t direction) const;
  const Rational& cell_area() const { return area_; }

  std::size_t site(std::size_t x, std::size_t y) const;
  std::size_t site_x(std::size_t p) const { return p / l2_; }
  std::size_t site_y(std::size_t p) const { return p % l2_; }
  /// Site p shifted by `step` (+1 or -1) in `direction` (1 or 2), periodically.
  std::size_t shift(std::size_t p, std::size_t direction, int step) const;

  std::size_t variable_count() const { return vars_.size(); }
  const Variable& variable(VarId v) const { return vars_.at(v); }

  VarId phi(std::size_t index, std::size_t p) const;
  VarId b(std::size_t index, std::size_t p) const;
  /// Courant: A^i_a. Doubled: A_aI.
  VarId a(std::size_t index, std::size_t form, std::size_t p) const;
  /// Courant model only: C_a,i.
  VarId c(std::size_t index, std::size_t form, std::size_t p) const;

  /// Nonzero canonical brackets {v, w} for fixed v.
  const std::vector<std::pair<VarId, Rational>>& partners(VarId v) const { return partners_.at(v); }
  Rational canonical_bracket(VarId v, VarId w) const;

  /// eta^{IJ} = eta_IJ, 1 when |I - J| = D and 0 otherwise (1-based indices).
  Rational eta(std::size_t i, std::size_t j) const;

 private:
  VarId add(FieldKind kind, std::size_t index, std::size_t form, std::size_t p);
  void add_pair(VarId v, VarId w, const Rational& value);

  Model model_;
  std::size_t dim_;
  std::size_t l1_;
  std::size_t l2_;
  Rational h1_;
  Rational h2_;
  Rational area_;
  std::vector<Variable> vars_;
  std::map<std::tuple<FieldKind, std::size_t, std::size_t, std::size_t>, VarId> lookup_;
  std::vector<std::vector<std::pair<VarId, Rational>>> partners_;
};

/// {F, G} = sum over canonical pairs of dF/dv dG/dw {v, w}. Throws
/// std::invalid_argument when either argument has a variable outside `ps`.
FieldPoly poisson_bracket(const FieldPoly& f, const FieldPoly& g, const LatticePhaseSpace& ps);

Rational evaluate(const FieldPoly& f, const std::vector<Rational>& values);

/// Forward difference (f(p + e_dir) - f(p)) / h_dir of a site-indexed family.
FieldPoly forward_difference(const LatticePhaseSpace& ps, std::size_t direction, std::size_t p,
                             const std::vector<VarId>& by_site);
/// Backward difference (f(p) - f(p - e_dir)) / h_dir.
FieldPoly backward_difference(const LatticePhaseSpace& ps, std::size_t direction, std::size_t p,
                              const std::vector<VarId>& by_site);

enum class ConstraintFamily { g, f, k };

struct Constraint {
  ConstraintFamily family;
  std::size_t index;  // i (Courant) or I (doubled), 1-based
  std::size_t form;   // a for G, 0 for F and K
  std::size_t site;
  std::string label;
  FieldPoly expr;
};

/// Courant model, per site p, with D the forward and Dbar the backward
/// difference:
///   G^i_a = D_a phi^i - A^i_a
///   K^i   = D_1 A^i_2 - D_2 A^i_1
///   F_i   = Dbar_1 C_2,i - Dbar_2 C_1,i + B_12,i
/// Doubled model:
///   G^I_a = D_a phi^I - eta^{IJ} A_aJ
///   F_I   = Dbar_1 A_2I - Dbar_2 A_1I + B_12,I
std::vector<Constraint> build_constraints(const LatticePhaseSpace& ps);

/// Delta * sum_k coefficients[k] * constraints[k].
FieldPoly smear(const LatticePhaseSpace& ps, const std::vector<Constraint>& constraints,
                const std::vector<Rational>& coefficients);

enum class BracketClass { weakly_zero, obstruction };
std::string to_string(BracketClass c);

struct PairReport {
  std::size_t first;
  std::size_t second;
  FieldPoly bracket;
  BracketClass cls;
};

struct PolarizationReport {
  /// "plain" keeps G^I for I <= D, "tilde" keeps I > D; all F are kept.
  std::string half;
  bool first_class = false;
  std::size_t obstruction_count = 0;
};

struct ConstraintAlgebraReport {
  Model model;
  std::vector<Constraint> constraints;
  /// Every unordered pair (first <= second).
  std::vector<PairReport> pairs;
  std::size_t obstruction_count = 0;
  bool first_class = false;
  /// Whether every {G^I_a(p), G^J_b(q)} equals eta^{IJ} eps_ab delta_pq / Delta.
  /// Empty for the Courant model.
  std::optional<bool> gg_matches_eta_eps;
  std::vector<PolarizationReport> polarizations;
};

/// A bracket is weakly zero when it is zero or a rational linear combination
/// of constraints (plus nothing else). Constraints here are affine, so this
/// is decided by Gaussian elimination; brackets of higher degree than one
/// are classified as obstructions unless zero.
ConstraintAlgebraReport constraint_algebra_report(const LatticePhaseSpace& ps);

/// Smearing coefficients of the gauge generator, one value per (index, site)
/// or (form, index, site).
struct GaugeParameters {
  std::vector<Rational> t;      // t^i(p) at [(i-1) * N + p]
  std::vector<Rational> t_bar;  // tbar_i(p) at [(i-1) * N + p]
  std::vector<Rational> u;      // u_a,i(p) at [((a-1) * D + (i-1)) * N + p]

  static GaugeParameters zero(const LatticePhaseSpace& ps);
};

/// Q = -Delta sum_p (t^i F_i + tbar_i K^i + eps^{ab} u_a,i G^i_b), eps^{12} = 1.
/// Throws std::invalid_argument for the doubled model.
FieldPoly gauge_generator(const LatticePhaseSpace& ps, const GaugeParameters& params);

/// delta Phi = {Phi, Q} for every variable, indexed by VarId.
std::vector<FieldPoly> generate_gauge_transformation(const LatticePhaseSpace& ps,
                                                     const GaugeParameters& params);

/// Delta sum_p (X^i C_a,i + alpha_i A^i_a) for the Courant model and
/// Delta sum_p X^I A_aI for the doubled model, where X^I lists the vector
/// components then the form components. Requires constant coefficients.
FieldPoly lift(const LatticePhaseSpace& ps, const GenSection& e, std::size_t form);

/// -{lift(e1, 2), lift(e2, 1)} / (N Delta), N the number of sites.
Rational lattice_pairing(const LatticePhaseSpace& ps, const GenSection& e1, const GenSection& e2);

/// -{{lift(e1, 1), h}, lift(e2, 2)}.
FieldPoly derived_bracket(const LatticePhaseSpace& ps, const GenSection& e1, const GenSection& e2,
                          const FieldPoly& h);

/// -{{lift(e, 1), h}, f}.
FieldPoly derived_anchor(const LatticePhaseSpace& ps, const GenSection& e, const FieldPoly& h,
                         const FieldPoly& f);

std::string to_string(const FieldPoly& f, const LatticePhaseSpace& ps);

}  // namespace vaisman::sigma
