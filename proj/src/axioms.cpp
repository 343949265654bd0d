#include "vaisman/axioms.hpp"

#include <algorithm>

#include "vaisman/parser.hpp"

namespace vaisman {

bool residual_is_zero(const Residual& r) {
  return std::visit([](const auto& v) { return v.is_zero(); }, r);
}

namespace {

ResidualReport make_report(std::string axiom, BracketKind kind, Residual residual,
                           Witness witness) {
  const bool zero = residual_is_zero(residual);
  return ResidualReport{std::move(axiom), kind, std::move(residual), zero, std::move(witness),
                        std::nullopt};
}

void require_same_space(const GenSection& a, const GenSection& b) {
  if (!(a.space() == b.space())) throw SpaceMismatch("sections over different doubled spaces");
}

void require_same_space(const GenSection& a, const GenSection& b, const GenSection& c,
                        const Poly& f) {
  require_same_space(a, b);
  require_same_space(a, c);
  if (!(a.space() == f.space())) throw SpaceMismatch("function over a different doubled space");
}

Poly doubled_partial(const Poly& p, std::size_t n) {
  const std::size_t dim = p.space().dim();
  return n < dim ? partial(p, Sector::plain, n + 1) : partial(p, Sector::tilde, n - dim + 1);
}

// Second-order probe: rho(e1)(rho(e2) f) - rho(e2)(rho(e1) f).
Poly anchor_commutator_on(BracketKind kind, const GenSection& e1, const GenSection& e2,
                          const Poly& f) {
  return anchor_apply(kind, e1, anchor_apply(kind, e2, f)) -
         anchor_apply(kind, e2, anchor_apply(kind, e1, f));
}

ResidualReport anchor_homomorphism(BracketKind kind, const GenSection& e1,
                                   const GenSection& e2, const Poly& f, std::string axiom) {
  const GenSection br = bracket(kind, e1, e2);
  const GenSection coeff_residual =
      anchor_vector_field(kind, br) -
      vector_field_commutator(anchor_vector_field(kind, e1), anchor_vector_field(kind, e2));
  const Poly probe = anchor_apply(kind, br, f) - anchor_commutator_on(kind, e1, e2, f);
  auto report = make_report(std::move(axiom), kind, coeff_residual, Witness{{e1, e2}, f});
  report.probe_residual = probe;
  return report;
}

ResidualReport leibniz_rule(BracketKind kind, const GenSection& e1, const GenSection& e2,
                            const Poly& f, std::string axiom) {
  GenSection residual = bracket(kind, e1, f * e2) - f * bracket(kind, e1, e2) -
                        anchor_apply(kind, e1, f) * e2;
  return make_report(std::move(axiom), kind, std::move(residual), Witness{{e1, e2}, f});
}

ResidualReport self_bracket(BracketKind kind, const GenSection& e, std::string axiom) {
  GenSection half_d = gen_derivative(kind, pairing(e, e));
  half_d *= Rational(1, 2);
  return make_report(std::move(axiom), kind, bracket(kind, e, e) - half_d, Witness{{e}, {}});
}

ResidualReport metric_compatibility(BracketKind kind, const GenSection& e1,
                                    const GenSection& e2, const GenSection& e3,
                                    std::string axiom) {
  Poly residual = anchor_apply(kind, e1, pairing(e2, e3)) - pairing(bracket(kind, e1, e2), e3) -
                  pairing(e2, bracket(kind, e1, e3));
  return make_report(std::move(axiom), kind, std::move(residual), Witness{{e1, e2, e3}, {}});
}

}  // namespace

GenSection leibniz_defect(BracketKind kind, const GenSection& e1, const GenSection& e2,
                          const GenSection& e3) {
  require_same_space(e1, e2);
  require_same_space(e1, e3);
  return bracket(kind, e1, bracket(kind, e2, e3)) - bracket(kind, bracket(kind, e1, e2), e3) -
         bracket(kind, e2, bracket(kind, e1, e3));
}

ResidualReport leibniz_residual(BracketKind kind, const GenSection& e1, const GenSection& e2,
                                const GenSection& e3) {
  return make_report("leibniz_identity", kind, leibniz_defect(kind, e1, e2, e3),
                     Witness{{e1, e2, e3}, {}});
}

GenSection anchor_vector_field(BracketKind kind, const GenSection& e) {
  if (kind != BracketKind::dorfman) return e;
  GenSection out(e.space());
  for (std::size_t mu = 0; mu < e.dim(); ++mu) out.vec(mu) = e.vec(mu);
  return out;
}

GenSection vector_field_commutator(const GenSection& u, const GenSection& v) {
  require_same_space(u, v);
  const std::size_t n2 = u.space().doubled_dim();
  GenSection out(u.space());
  for (std::size_t m = 0; m < n2; ++m) {
    Poly acc(u.space());
    for (std::size_t k = 0; k < n2; ++k) {
      acc += u.component(k) * doubled_partial(v.component(m), k);
      acc -= v.component(k) * doubled_partial(u.component(m), k);
    }
    out.component(m) = std::move(acc);
  }
  return out;
}

std::vector<ResidualReport> check_courant(BracketKind kind, const GenSection& e1,
                                          const GenSection& e2, const GenSection& e3,
                                          const Poly& f) {
  require_same_space(e1, e2, e3, f);
  std::vector<ResidualReport> out;
  auto leibniz = leibniz_residual(kind, e1, e2, e3);
  leibniz.axiom = "courant.1.leibniz_identity";
  out.push_back(std::move(leibniz));
  out.push_back(anchor_homomorphism(kind, e1, e2, f, "courant.2.anchor_homomorphism"));
  out.push_back(leibniz_rule(kind, e1, e2, f, "courant.3.leibniz_rule"));
  out.push_back(self_bracket(kind, e1, "courant.4.self_bracket"));
  out.push_back(metric_compatibility(kind, e1, e2, e3, "courant.5.metric_compatibility"));
  return out;
}

std::vector<ResidualReport> check_vaisman(BracketKind kind, const GenSection& e1,
                                          const GenSection& e2, const GenSection& e3,
                                          const Poly& f) {
  require_same_space(e1, e2, e3, f);
  std::vector<ResidualReport> out;
  out.push_back(leibniz_rule(kind, e1, e2, f, "vaisman.1.leibniz_rule"));
  out.push_back(metric_compatibility(kind, e1, e2, e3, "vaisman.2.metric_compatibility"));
  return out;
}

ResidualReport check_reduction(const GenSection& e1, const GenSection& e2) {
  require_same_space(e1, e2);
  const GenSection p1 = strong_constraint_project(e1);
  const GenSection p2 = strong_constraint_project(e2);
  return make_report("strong_constraint_reduction", BracketKind::d_bracket,
                     d_bracket(p1, p2) - dorfman_bracket(p1, p2), Witness{{e1, e2}, {}});
}

bool all_zero(const std::vector<ResidualReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.is_zero; });
}

namespace {

GenSection section(std::size_t dim, std::initializer_list<const char*> vec,
                   std::initializer_list<const char*> form) {
  const DoubledSpace space(dim);
  std::vector<Poly> v, w;
  for (const char* s : vec) v.push_back(parse_poly(s, space));
  for (const char* s : form) w.push_back(parse_poly(s, space));
  return GenSection(std::move(v), std::move(w));
}

std::vector<PinnedWitness> build_witnesses() {
  std::vector<PinnedWitness> out;
  const auto add = [&](std::string name, GenSection e1, GenSection e2, GenSection e3,
                       const char* f) {
    Poly fp = parse_poly(f, e1.space());
    out.push_back(PinnedWitness{std::move(name), std::move(e1), std::move(e2), std::move(e3),
                                std::move(fp)});
  };
  // Found by seeded random search over sparse degree-<=1 sections.
  add("pinned-1", section(1, {"-x1"}, {"-1"}), section(1, {"0"}, {"x1"}),
      section(1, {"0"}, {"xt1"}), "x1*xt1 + 1");
  add("pinned-2", section(1, {"-xt1"}, {"0"}), section(1, {"0"}, {"1"}),
      section(1, {"0"}, {"-x1"}), "x1^2 - xt1");
  add("pinned-3", section(2, {"1", "x2"}, {"0", "0"}), section(2, {"0", "0"}, {"-xt2", "0"}),
      section(2, {"0", "-1"}, {"0", "1"}), "x1*xt2 + x2");
  add("pinned-4", section(2, {"x2", "0"}, {"-1", "0"}), section(2, {"0", "1"}, {"x1", "0"}),
      section(2, {"0", "xt2"}, {"0", "0"}), "xt1*xt2 - 2*x1");
  return out;
}

}  // namespace

const std::vector<PinnedWitness>& pinned_witnesses() {
  static const std::vector<PinnedWitness> witnesses = build_witnesses();
  return witnesses;
}

std::optional<PinnedWitness> find_pinned_witness(const std::string& name) {
  for (const auto& w : pinned_witnesses()) {
    if (w.name == name) return w;
  }
  return std::nullopt;
}

}  // namespace vaisman
