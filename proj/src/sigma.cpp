#include "vaisman/sigma.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vaisman::sigma {

// ---------------------------------------------------------------- FieldPoly

FieldPoly FieldPoly::constant(const Rational& c) {
  FieldPoly out;
  out.add_term({}, c);
  return out;
}

FieldPoly FieldPoly::variable(VarId v, const Rational& c) {
  FieldPoly out;
  out.add_term({v}, c);
  return out;
}

std::uint32_t FieldPoly::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<std::uint32_t>(m.size()));
  return d;
}

Rational FieldPoly::constant_term() const {
  const auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational FieldPoly::linear_coefficient(VarId v) const {
  const auto it = terms_.find({v});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<VarId> FieldPoly::variables() const {
  std::set<VarId> seen;
  for (const auto& [m, c] : terms_) seen.insert(m.begin(), m.end());
  return {seen.begin(), seen.end()};
}

FieldPoly FieldPoly::derivative(VarId v) const {
  FieldPoly out;
  for (const auto& [m, c] : terms_) {
    const auto first = std::lower_bound(m.begin(), m.end(), v);
    if (first == m.end() || *first != v) continue;
    const auto count = std::upper_bound(first, m.end(), v) - first;
    Monomial reduced(m.begin(), first);
    reduced.insert(reduced.end(), first + 1, m.end());
    out.add_term(std::move(reduced), c * static_cast<long>(count));
  }
  return out;
}

void FieldPoly::add_term(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

FieldPoly& FieldPoly::operator+=(const FieldPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

FieldPoly& FieldPoly::operator-=(const FieldPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

FieldPoly& FieldPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      FieldPoly::Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------- models

std::string to_string(Model m) {
  return m == Model::standard_courant ? "courant" : "doubled";
}

Model parse_model(const std::string& name) {
  if (name == "courant" || name == "standard_courant") return Model::standard_courant;
  if (name == "doubled") return Model::doubled;
  throw std::invalid_argument("unknown sigma model '" + name + "' (expected courant or doubled)");
}

namespace {

Rational eps(std::size_t a, std::size_t b) {
  if (a == 1 && b == 2) return 1;
  if (a == 2 && b == 1) return -1;
  return 0;
}

std::string site_suffix(const LatticePhaseSpace& ps, std::size_t p) {
  return "(" + std::to_string(ps.site_x(p)) + "," + std::to_string(ps.site_y(p)) + ")";
}

}  // namespace

LatticePhaseSpace::LatticePhaseSpace(Model model, std::size_t dim, std::size_t l1, std::size_t l2,
                                     Rational h1, Rational h2)
    : model_(model), dim_(dim), l1_(l1), l2_(l2), h1_(std::move(h1)), h2_(std::move(h2)) {
  if (dim == 0) throw std::invalid_argument("target dimension must be at least 1");
  if (l1 == 0 || l2 == 0) throw std::invalid_argument("grid sides must be at least 1");
  if (sgn(h1_) <= 0 || sgn(h2_) <= 0) throw std::invalid_argument("lattice spacing must be positive");
  area_ = h1_ * h2_;

  const std::size_t n = target_dim();
  for (std::size_t p = 0; p < sites(); ++p) {
    for (std::size_t i = 1; i <= n; ++i) {
      add(FieldKind::phi, i, 0, p);
      add(FieldKind::b, i, 0, p);
      for (std::size_t f = 1; f <= 2; ++f) {
        add(FieldKind::a, i, f, p);
        if (model_ == Model::standard_courant) add(FieldKind::c, i, f, p);
      }
    }
  }
  partners_.assign(vars_.size(), {});

  const Rational inv_area = 1 / area_;
  for (std::size_t p = 0; p < sites(); ++p) {
    for (std::size_t i = 1; i <= n; ++i) {
      add_pair(phi(i, p), b(i, p), -inv_area);
      for (std::size_t fa = 1; fa <= 2; ++fa) {
        for (std::size_t fb = 1; fb <= 2; ++fb) {
          if (sgn(eps(fa, fb)) == 0) continue;
          if (model_ == Model::standard_courant) {
            add_pair(a(i, fa, p), c(i, fb, p), eps(fa, fb) * inv_area);
          } else {
            for (std::size_t j = 1; j <= n; ++j) {
              const Rational e = eta(i, j);
              // Each unordered doubled pair is visited twice; keep one.
              if (sgn(e) != 0 && a(i, fa, p) < a(j, fb, p)) {
                add_pair(a(i, fa, p), a(j, fb, p), eps(fa, fb) * e * inv_area);
              }
            }
          }
        }
      }
    }
  }
}

std::size_t LatticePhaseSpace::target_dim() const {
  return model_ == Model::standard_courant ? dim_ : 2 * dim_;
}

const Rational& LatticePhaseSpace::spacing(std::size_t direction) const {
  if (direction == 1) return h1_;
  if (direction == 2) return h2_;
  throw std::out_of_range("lattice direction must be 1 or 2");
}

std::size_t LatticePhaseSpace::site(std::size_t x, std::size_t y) const {
  if (x >= l1_ || y >= l2_) throw std::out_of_range("site outside the grid");
  return x * l2_ + y;
}

std::size_t LatticePhaseSpace::shift(std::size_t p, std::size_t direction, int step) const {
  std::size_t x = site_x(p);
  std::size_t y = site_y(p);
  if (direction == 1) {
    x = (x + (step > 0 ? 1 : l1_ - 1)) % l1_;
  } else if (direction == 2) {
    y = (y + (step > 0 ? 1 : l2_ - 1)) % l2_;
  } else {
    throw std::out_of_range("lattice direction must be 1 or 2");
  }
  return site(x, y);
}

VarId LatticePhaseSpace::add(FieldKind kind, std::size_t index, std::size_t form, std::size_t p) {
  const auto id = static_cast<VarId>(vars_.size());
  std::string label;
  const std::string i = std::to_string(index);
  const std::string f = std::to_string(form);
  switch (kind) {
    case FieldKind::phi: label = "phi" + i; break;
    case FieldKind::b: label = "B" + i; break;
    case FieldKind::a:
      label = model_ == Model::standard_courant ? "A" + i + "_" + f : "A" + f + "_" + i;
      break;
    case FieldKind::c: label = "C" + f + "_" + i; break;
  }
  vars_.push_back({kind, index, form, p, label + site_suffix(*this, p)});
  lookup_.emplace(std::make_tuple(kind, index, form, p), id);
  return id;
}

void LatticePhaseSpace::add_pair(VarId v, VarId w, const Rational& value) {
  partners_[v].emplace_back(w, value);
  partners_[w].emplace_back(v, -value);
}

namespace {

VarId find_var(const std::map<std::tuple<FieldKind, std::size_t, std::size_t, std::size_t>, VarId>& lookup,
               FieldKind kind, std::size_t index, std::size_t form, std::size_t p) {
  const auto it = lookup.find(std::make_tuple(kind, index, form, p));
  if (it == lookup.end()) throw std::out_of_range("no such lattice variable");
  return it->second;
}

}  // namespace

VarId LatticePhaseSpace::phi(std::size_t index, std::size_t p) const {
  return find_var(lookup_, FieldKind::phi, index, 0, p);
}
VarId LatticePhaseSpace::b(std::size_t index, std::size_t p) const {
  return find_var(lookup_, FieldKind::b, index, 0, p);
}
VarId LatticePhaseSpace::a(std::size_t index, std::size_t form, std::size_t p) const {
  return find_var(lookup_, FieldKind::a, index, form, p);
}
VarId LatticePhaseSpace::c(std::size_t index, std::size_t form, std::size_t p) const {
  return find_var(lookup_, FieldKind::c, index, form, p);
}

Rational LatticePhaseSpace::canonical_bracket(VarId v, VarId w) const {
  for (const auto& [other, value] : partners_.at(v)) {
    if (other == w) return value;
  }
  return 0;
}

Rational LatticePhaseSpace::eta(std::size_t i, std::size_t j) const {
  const std::size_t n = 2 * dim_;
  if (i == 0 || j == 0 || i > n || j > n) throw std::out_of_range("eta index out of range");
  return (i + dim_ == j || j + dim_ == i) ? 1 : 0;
}

// ---------------------------------------------------------------- brackets

namespace {

void check_vars(const FieldPoly& f, const LatticePhaseSpace& ps) {
  for (const auto& [m, c] : f.terms()) {
    if (!m.empty() && m.back() >= ps.variable_count()) {
      throw std::invalid_argument("field polynomial uses variable " + std::to_string(m.back()) +
                                  " outside the phase space");
    }
  }
}

}  // namespace

FieldPoly poisson_bracket(const FieldPoly& f, const FieldPoly& g, const LatticePhaseSpace& ps) {
  check_vars(f, ps);
  check_vars(g, ps);
  const auto g_vars = g.variables();
  std::map<VarId, FieldPoly> dg;
  FieldPoly out;
  for (const VarId v : f.variables()) {
    FieldPoly df;
    bool have_df = false;
    for (const auto& [w, value] : ps.partners(v)) {
      if (!std::binary_search(g_vars.begin(), g_vars.end(), w)) continue;
      if (!have_df) {
        df = f.derivative(v);
        have_df = true;
      }
      auto it = dg.find(w);
      if (it == dg.end()) it = dg.emplace(w, g.derivative(w)).first;
      out += (df * it->second) * value;
    }
  }
  return out;
}

Rational evaluate(const FieldPoly& f, const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational term = c;
    for (const VarId v : m) term *= values.at(v);
    total += term;
  }
  return total;
}

FieldPoly forward_difference(const LatticePhaseSpace& ps, std::size_t direction, std::size_t p,
                             const std::vector<VarId>& by_site) {
  const Rational inv_h = 1 / ps.spacing(direction);
  FieldPoly out = FieldPoly::variable(by_site.at(ps.shift(p, direction, 1)), inv_h);
  out -= FieldPoly::variable(by_site.at(p), inv_h);
  return out;
}

FieldPoly backward_difference(const LatticePhaseSpace& ps, std::size_t direction, std::size_t p,
                              const std::vector<VarId>& by_site) {
  const Rational inv_h = 1 / ps.spacing(direction);
  FieldPoly out = FieldPoly::variable(by_site.at(p), inv_h);
  out -= FieldPoly::variable(by_site.at(ps.shift(p, direction, -1)), inv_h);
  return out;
}

// ---------------------------------------------------------------- constraints

namespace {

template <class F>
std::vector<VarId> family(const LatticePhaseSpace& ps, F&& pick) {
  std::vector<VarId> out(ps.sites());
  for (std::size_t p = 0; p < ps.sites(); ++p) out[p] = pick(p);
  return out;
}

}  // namespace

std::vector<Constraint> build_constraints(const LatticePhaseSpace& ps) {
  std::vector<Constraint> out;
  const std::size_t n = ps.target_dim();
  const bool courant = ps.model() == Model::standard_courant;
  for (std::size_t p = 0; p < ps.sites(); ++p) {
    const std::string where = site_suffix(ps, p);
    for (std::size_t i = 1; i <= n; ++i) {
      const std::string idx = (courant ? "[i=" : "[I=") + std::to_string(i);
      const auto phis = family(ps, [&](std::size_t q) { return ps.phi(i, q); });
      for (std::size_t a = 1; a <= 2; ++a) {
        FieldPoly g = forward_difference(ps, a, p, phis);
        if (courant) {
          g -= FieldPoly::variable(ps.a(i, a, p));
        } else {
          for (std::size_t j = 1; j <= n; ++j) {
            if (sgn(ps.eta(i, j)) != 0) g -= FieldPoly::variable(ps.a(j, a, p), ps.eta(i, j));
          }
        }
        out.push_back({ConstraintFamily::g, i, a, p, "G" + idx + ",a=" + std::to_string(a) + "]" + where,
                       std::move(g)});
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      const std::string idx = (courant ? "[i=" : "[I=") + std::to_string(i) + "]";
      const auto pick_f = [&](std::size_t form) {
        return family(ps, [&](std::size_t q) { return courant ? ps.c(i, form, q) : ps.a(i, form, q); });
      };
      FieldPoly f = backward_difference(ps, 1, p, pick_f(2)) - backward_difference(ps, 2, p, pick_f(1));
      f += FieldPoly::variable(ps.b(i, p));
      out.push_back({ConstraintFamily::f, i, 0, p, "F" + idx + where, std::move(f)});
      if (courant) {
        const auto a2 = family(ps, [&](std::size_t q) { return ps.a(i, 2, q); });
        const auto a1 = family(ps, [&](std::size_t q) { return ps.a(i, 1, q); });
        FieldPoly k = forward_difference(ps, 1, p, a2) - forward_difference(ps, 2, p, a1);
        out.push_back({ConstraintFamily::k, i, 0, p, "K" + idx + where, std::move(k)});
      }
    }
  }
  return out;
}

FieldPoly smear(const LatticePhaseSpace& ps, const std::vector<Constraint>& constraints,
                const std::vector<Rational>& coefficients) {
  if (coefficients.size() != constraints.size()) {
    throw std::invalid_argument("one smearing coefficient per constraint is required");
  }
  FieldPoly out;
  for (std::size_t k = 0; k < constraints.size(); ++k) out += constraints[k].expr * coefficients[k];
  return out * ps.cell_area();
}

std::string to_string(BracketClass c) {
  return c == BracketClass::weakly_zero ? "weakly_zero" : "obstruction";
}

namespace {

// Sparse affine vectors: key 0 is the constant term, key v + 1 is variable v.
using Row = std::map<std::size_t, Rational>;

Row affine_row(const FieldPoly& f) {
  Row row;
  for (const auto& [m, c] : f.terms()) {
    if (m.size() > 1) throw std::logic_error("affine_row on a nonlinear polynomial");
    row[m.empty() ? 0 : m.front() + 1u] = c;
  }
  return row;
}

void subtract_scaled(Row& target, const Row& row, const Rational& factor) {
  for (const auto& [k, v] : row) {
    Rational& slot = target[k];
    slot -= factor * v;
    if (sgn(slot) == 0) target.erase(k);
  }
}

class AffineSpan {
 public:
  void add(Row row) {
    reduce(row);
    if (row.empty()) return;
    const auto [pivot, value] = *row.begin();
    const Rational inv = 1 / value;
    for (auto& [k, v] : row) v *= inv;
    rows_.emplace_back(pivot, std::move(row));
  }

  bool contains(Row row) const {
    reduce(row);
    return row.empty();
  }

 private:
  // Each stored row is zero at every earlier pivot, so one ordered pass reduces fully.
  void reduce(Row& row) const {
    for (const auto& [pivot, basis] : rows_) {
      const auto it = row.find(pivot);
      if (it != row.end()) subtract_scaled(row, basis, Rational(it->second));
    }
  }

  std::vector<std::pair<std::size_t, Row>> rows_;
};

BracketClass classify(const FieldPoly& bracket, const AffineSpan& span) {
  if (bracket.is_zero()) return BracketClass::weakly_zero;
  if (bracket.degree() > 1) return BracketClass::obstruction;
  return span.contains(affine_row(bracket)) ? BracketClass::weakly_zero : BracketClass::obstruction;
}

}  // namespace

ConstraintAlgebraReport constraint_algebra_report(const LatticePhaseSpace& ps) {
  ConstraintAlgebraReport report;
  report.model = ps.model();
  report.constraints = build_constraints(ps);
  const auto& cs = report.constraints;

  AffineSpan span;
  for (const auto& c : cs) span.add(affine_row(c.expr));

  const bool doubled = ps.model() == Model::doubled;
  bool gg_ok = true;
  const Rational inv_area = 1 / ps.cell_area();
  for (std::size_t x = 0; x < cs.size(); ++x) {
    for (std::size_t y = x; y < cs.size(); ++y) {
      FieldPoly br = poisson_bracket(cs[x].expr, cs[y].expr, ps);
      const BracketClass cls = classify(br, span);
      if (cls == BracketClass::obstruction) ++report.obstruction_count;
      if (doubled && cs[x].family == ConstraintFamily::g && cs[y].family == ConstraintFamily::g) {
        Rational expected = 0;
        if (cs[x].site == cs[y].site) {
          expected = ps.eta(cs[x].index, cs[y].index) * eps(cs[x].form, cs[y].form) * inv_area;
        }
        gg_ok = gg_ok && br == FieldPoly::constant(expected);
      }
      report.pairs.push_back({x, y, std::move(br), cls});
    }
  }
  report.first_class = report.obstruction_count == 0;
  if (doubled) {
    report.gg_matches_eta_eps = gg_ok;
    for (const std::string half : {"plain", "tilde"}) {
      const auto kept = [&](const Constraint& c) {
        if (c.family != ConstraintFamily::g) return true;
        return half == "plain" ? c.index <= ps.dim() : c.index > ps.dim();
      };
      PolarizationReport pol{half};
      for (const auto& pr : report.pairs) {
        if (kept(cs[pr.first]) && kept(cs[pr.second]) && pr.cls == BracketClass::obstruction) {
          ++pol.obstruction_count;
        }
      }
      pol.first_class = pol.obstruction_count == 0;
      report.polarizations.push_back(pol);
    }
  }
  return report;
}

// ---------------------------------------------------------------- gauge

GaugeParameters GaugeParameters::zero(const LatticePhaseSpace& ps) {
  const std::size_t n = ps.dim() * ps.sites();
  return {std::vector<Rational>(n), std::vector<Rational>(n), std::vector<Rational>(2 * n)};
}

FieldPoly gauge_generator(const LatticePhaseSpace& ps, const GaugeParameters& params) {
  if (ps.model() != Model::standard_courant) {
    throw std::invalid_argument("gauge transformations are generated only for the courant model");
  }
  const std::size_t d = ps.dim();
  const std::size_t n = ps.sites();
  if (params.t.size() != d * n || params.t_bar.size() != d * n || params.u.size() != 2 * d * n) {
    throw std::invalid_argument("gauge parameter arrays have the wrong size");
  }
  FieldPoly q;
  for (const auto& c : build_constraints(ps)) {
    const std::size_t at = (c.index - 1) * n + c.site;
    switch (c.family) {
      case ConstraintFamily::f: q += c.expr * params.t[at]; break;
      case ConstraintFamily::k: q += c.expr * params.t_bar[at]; break;
      case ConstraintFamily::g: {
        // eps^{ab} u_a G_b: G_2 pairs with u_1, G_1 with -u_2.
        const std::size_t other = c.form == 1 ? 2 : 1;
        const Rational sign = eps(other, c.form);
        q += c.expr * (sign * params.u[((other - 1) * d + (c.index - 1)) * n + c.site]);
        break;
      }
    }
  }
  return q * (-ps.cell_area());
}

std::vector<FieldPoly> generate_gauge_transformation(const LatticePhaseSpace& ps,
                                                     const GaugeParameters& params) {
  const FieldPoly q = gauge_generator(ps, params);
  std::vector<FieldPoly> out;
  out.reserve(ps.variable_count());
  for (VarId v = 0; v < ps.variable_count(); ++v) {
    out.push_back(poisson_bracket(FieldPoly::variable(v), q, ps));
  }
  return out;
}

// ---------------------------------------------------------------- derived maps

namespace {

Rational constant_component(const Poly& p) {
  if (!p.is_constant()) throw std::invalid_argument("lattice lift requires constant section coefficients");
  return p.constant_term();
}

}  // namespace

FieldPoly lift(const LatticePhaseSpace& ps, const GenSection& e, std::size_t form) {
  if (e.dim() != ps.dim()) throw SpaceMismatch("section dimension does not match the lattice model");
  if (form != 1 && form != 2) throw std::out_of_range("form index must be 1 or 2");
  const std::size_t d = ps.dim();
  FieldPoly out;
  for (std::size_t p = 0; p < ps.sites(); ++p) {
    for (std::size_t mu = 0; mu < d; ++mu) {
      const Rational x = constant_component(e.vec(mu));
      const Rational alpha = constant_component(e.form(mu));
      if (ps.model() == Model::standard_courant) {
        out += FieldPoly::variable(ps.c(mu + 1, form, p), x);
        out += FieldPoly::variable(ps.a(mu + 1, form, p), alpha);
      } else {
        out += FieldPoly::variable(ps.a(mu + 1, form, p), x);
        out += FieldPoly::variable(ps.a(d + mu + 1, form, p), alpha);
      }
    }
  }
  return out * ps.cell_area();
}

Rational lattice_pairing(const LatticePhaseSpace& ps, const GenSection& e1, const GenSection& e2) {
  const FieldPoly br = poisson_bracket(lift(ps, e1, 2), lift(ps, e2, 1), ps);
  if (br.degree() > 0) throw std::logic_error("lattice pairing of constant lifts is not constant");
  return -br.constant_term() / (ps.cell_area() * static_cast<long>(ps.sites()));
}

FieldPoly derived_bracket(const LatticePhaseSpace& ps, const GenSection& e1, const GenSection& e2,
                          const FieldPoly& h) {
  return -poisson_bracket(poisson_bracket(lift(ps, e1, 1), h, ps), lift(ps, e2, 2), ps);
}

FieldPoly derived_anchor(const LatticePhaseSpace& ps, const GenSection& e, const FieldPoly& h,
                         const FieldPoly& f) {
  return -poisson_bracket(poisson_bracket(lift(ps, e, 1), h, ps), f, ps);
}

std::string to_string(const FieldPoly& f, const LatticePhaseSpace& ps) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print higher-degree terms first for readability.
  std::vector<std::pair<const FieldPoly::Monomial*, const Rational*>> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(&m, &c);
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& x, const auto& y) { return x.first->size() > y.first->size(); });
  for (const auto& [m, c] : terms) {
    Rational coeff = *c;
    if (first) {
      if (sgn(coeff) < 0) os << "-";
    } else {
      os << (sgn(coeff) < 0 ? " - " : " + ");
    }
    coeff = abs(coeff);
    bool need_star = false;
    if (m->empty() || coeff != 1) {
      os << rational_to_string(coeff);
      need_star = true;
    }
    for (const VarId v : *m) {
      if (need_star) os << "*";
      os << ps.variable(v).label;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace vaisman::sigma
