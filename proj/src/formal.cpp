#include "vaisman/formal.hpp"

#include <algorithm>

namespace vaisman {

namespace {

void require_no_constant_term(const SectionJet& a) {
  if (a.has_constant_term()) {
    throw std::invalid_argument("exponent series must vanish at the origin of the parameters");
  }
}

SectionJet constant_jet(const GenSection& e, std::uint32_t order) {
  return SectionJet::constant(order, e, GenSection::zero(e.space()));
}

FunctionJet constant_jet(const Poly& f, std::uint32_t order) {
  return FunctionJet::constant(order, f, Poly(f.space()));
}

// Places e at t^1 (or s^1).
SectionJet linear_jet(const GenSection& e, Bidegree at, std::uint32_t order) {
  SectionJet out(order, GenSection::zero(e.space()));
  out.set(at, e);
  return out;
}

template <class T, class Step>
Jet<T> exponential(const Jet<T>& start, std::uint32_t order, Step&& step) {
  Jet<T> result = start;
  Jet<T> term = start;
  for (std::uint32_t k = 1; k <= order && !term.is_zero(); ++k) {
    term = step(term);
    term *= Rational(1, k);
    result += term;
  }
  return result;
}

template <class T>
GradedReport make_graded(RackIdentity id, BracketKind kind, std::uint32_t order, Jet<T> residual) {
  std::vector<Bidegree> nonzero;
  for (const auto& [d, c] : residual.coefficients()) nonzero.push_back(d);
  std::sort(nonzero.begin(), nonzero.end(), [](const Bidegree& a, const Bidegree& b) {
    return a.total() != b.total() ? a.total() < b.total() : a < b;
  });
  const auto lowest = residual.lowest_degree();
  return GradedReport{id, kind, order, std::move(residual), lowest, std::move(nonzero)};
}

}  // namespace

SectionJet exp_ad_series(BracketKind kind, const SectionJet& a, const SectionJet& b) {
  require_no_constant_term(a);
  const std::uint32_t order = std::min(a.order(), b.order());
  const auto br = [kind](const GenSection& x, const GenSection& y) { return bracket(kind, x, y); };
  return exponential(b, order, [&](const SectionJet& term) {
    return cauchy_product(a, term, br, order);
  });
}

FunctionJet exp_anchor_series(BracketKind kind, const SectionJet& a, const FunctionJet& f) {
  require_no_constant_term(a);
  const std::uint32_t order = std::min(a.order(), f.order());
  const auto rho = [kind](const GenSection& e, const Poly& g) { return anchor_apply(kind, e, g); };
  return exponential(f, order, [&](const FunctionJet& term) {
    return cauchy_product(a, term, rho, order);
  });
}

SectionJet exp_ad(BracketKind kind, const GenSection& e1, const GenSection& e2,
                  std::uint32_t order) {
  if (!(e1.space() == e2.space())) throw SpaceMismatch("sections over different doubled spaces");
  if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
  return exp_ad_series(kind, linear_jet(e1, {1, 0}, order), constant_jet(e2, order));
}

FunctionJet exp_anchor(BracketKind kind, const GenSection& e, const Poly& f,
                       std::uint32_t order) {
  if (!(e.space() == f.space())) throw SpaceMismatch("section and function over different spaces");
  if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
  return exp_anchor_series(kind, linear_jet(e, {1, 0}, order), constant_jet(f, order));
}

FunctionJet exp_anchor(const GenSection& e, const Poly& f, std::uint32_t order) {
  return exp_anchor(BracketKind::d_bracket, e, f, order);
}

GradedReport check_formal_rack_identity(BracketKind kind, RackIdentity identity,
                                        const GenSection& e1, const GenSection& e2,
                                        const GenSection& e3, const Poly& f,
                                        std::uint32_t order) {
  if (!(e1.space() == e2.space()) || !(e1.space() == e3.space()) || !(e1.space() == f.space())) {
    throw SpaceMismatch("inputs over different doubled spaces");
  }
  if (order < 2) {
    throw std::invalid_argument("rack identities need truncation order >= 2 (first mixed term"
                                " is bidegree (1,1))");
  }
  const SectionJet t_e1 = linear_jet(e1, {1, 0}, order);
  const SectionJet s_e2 = linear_jet(e2, {0, 1}, order);

  switch (identity) {
    case RackIdentity::self_distributive_sections: {
      const SectionJet lhs = exp_ad_series(kind, t_e1, exp_ad_series(kind, s_e2, constant_jet(e3, order)));
      const SectionJet moved = exp_ad_series(kind, t_e1, s_e2);
      const SectionJet rhs =
          exp_ad_series(kind, moved, exp_ad_series(kind, t_e1, constant_jet(e3, order)));
      return make_graded(identity, kind, order, lhs - rhs);
    }
    case RackIdentity::self_distributive_functions: {
      const FunctionJet lhs =
          exp_anchor_series(kind, t_e1, exp_anchor_series(kind, s_e2, constant_jet(f, order)));
      const SectionJet moved = exp_ad_series(kind, t_e1, s_e2);
      const FunctionJet rhs =
          exp_anchor_series(kind, moved, exp_anchor_series(kind, t_e1, constant_jet(f, order)));
      return make_graded(identity, kind, order, lhs - rhs);
    }
    case RackIdentity::module_compatibility: {
      const SectionJet lhs = exp_ad_series(kind, t_e1, constant_jet(f * e2, order));
      const auto scale = [](const Poly& g, const GenSection& e) { return g * e; };
      const SectionJet rhs =
          cauchy_product(exp_anchor_series(kind, t_e1, constant_jet(f, order)),
                         exp_ad_series(kind, t_e1, constant_jet(e2, order)), scale, order);
      return make_graded(identity, kind, order, lhs - rhs);
    }
    case RackIdentity::metric_compatibility: {
      const FunctionJet lhs = exp_anchor_series(kind, t_e1, constant_jet(pairing(e2, e3), order));
      const auto pair = [](const GenSection& a, const GenSection& b) { return pairing(a, b); };
      const FunctionJet rhs =
          cauchy_product(exp_ad_series(kind, t_e1, constant_jet(e2, order)),
                         exp_ad_series(kind, t_e1, constant_jet(e3, order)), pair, order);
      return make_graded(identity, kind, order, lhs - rhs);
    }
  }
  throw std::invalid_argument("unknown rack identity");
}

std::string to_string(RackIdentity id) {
  switch (id) {
    case RackIdentity::self_distributive_sections: return "self_distributive_sections";
    case RackIdentity::self_distributive_functions: return "self_distributive_functions";
    case RackIdentity::module_compatibility: return "module_compatibility";
    case RackIdentity::metric_compatibility: return "metric_compatibility";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Finite-dimensional Leibniz algebras

namespace {

using Element = LeibnizAlgebra::Element;

bool is_zero(const Element& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Element add(Element a, const Element& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

// Row-reduces `vectors` in place and returns a basis of their span.
std::vector<Element> span_basis(std::vector<Element> vectors) {
  std::vector<Element> basis;
  if (vectors.empty()) return basis;
  const std::size_t n = vectors.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < vectors.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < vectors.size() && sgn(vectors[pivot][col]) == 0) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[row], vectors[pivot]);
    const Rational lead = vectors[row][col];
    for (auto& q : vectors[row]) q /= lead;
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (r == row || sgn(vectors[r][col]) == 0) continue;
      const Rational factor = vectors[r][col];
      for (std::size_t k = 0; k < n; ++k) vectors[r][k] -= factor * vectors[row][k];
    }
    ++row;
  }
  vectors.resize(row);
  return vectors;
}

}  // namespace

LeibnizAlgebra::LeibnizAlgebra(std::vector<std::vector<Element>> constants)
    : dim_(constants.size()), constants_(std::move(constants)) {
  if (dim_ == 0) throw std::invalid_argument("Leibniz algebra must have positive dimension");
  for (const auto& row : constants_) {
    if (row.size() != dim_) throw std::invalid_argument("structure constants must be m x m x m");
    for (const auto& v : row) {
      if (v.size() != dim_) throw std::invalid_argument("structure constants must be m x m x m");
    }
  }
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = 0; b < dim_; ++b) {
      for (std::size_t c = 0; c < dim_; ++c) {
        const Element ea = basis(a), eb = basis(b), ec = basis(c);
        const Element lhs = bracket(ea, bracket(eb, ec));
        const Element rhs = add(bracket(bracket(ea, eb), ec), bracket(eb, bracket(ea, ec)));
        if (lhs != rhs) {
          throw std::invalid_argument("structure constants violate the left Leibniz identity on (e" +
                                      std::to_string(a + 1) + ", e" + std::to_string(b + 1) +
                                      ", e" + std::to_string(c + 1) + ")");
        }
      }
    }
  }

  std::vector<Element> current;
  for (std::size_t i = 0; i < dim_; ++i) current.push_back(basis(i));
  for (std::size_t step = 1; step <= dim_ + 1; ++step) {
    std::vector<Element> next;
    for (const auto& v : current) {
      for (std::size_t i = 0; i < dim_; ++i) {
        next.push_back(bracket(basis(i), v));
        next.push_back(bracket(v, basis(i)));
      }
    }
    next = span_basis(std::move(next));
    if (next.empty()) {
      nilpotency_ = step;
      break;
    }
    if (next.size() == current.size()) break;
    current = std::move(next);
  }
}

Element LeibnizAlgebra::basis(std::size_t i) const {
  Element e(dim_, Rational(0));
  e.at(i) = 1;
  return e;
}

Element LeibnizAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("element has wrong dimension");
  Element out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += w * constants_[i][j][k];
    }
  }
  return out;
}

Element LeibnizAlgebra::exp_ad_exact(const Element& x, const Element& y) const {
  if (!nilpotency_) {
    throw std::domain_error("exp(ad x) does not terminate on a non-nilpotent algebra; use the"
                            " truncated exponential");
  }
  return exp_ad_truncated(x, y, static_cast<std::uint32_t>(*nilpotency_));
}

Element LeibnizAlgebra::exp_ad_truncated(const Element& x, const Element& y,
                                         std::uint32_t order) const {
  Element result = y;
  Element term = y;
  for (std::uint32_t k = 1; k <= order && !is_zero(term); ++k) {
    term = bracket(x, term);
    for (auto& q : term) q /= k;
    result = add(std::move(result), term);
  }
  return result;
}

namespace {
std::vector<std::vector<Element>> zero_constants(std::size_t m) {
  return std::vector<std::vector<Element>>(m, std::vector<Element>(m, Element(m, Rational(0))));
}
}  // namespace

LeibnizAlgebra nilpotent_leibniz_2d() {
  auto c = zero_constants(2);
  c[0][0][1] = 1;
  return LeibnizAlgebra(std::move(c));
}

LeibnizAlgebra heisenberg_3d() {
  auto c = zero_constants(3);
  c[0][1][2] = 1;
  c[1][0][2] = -1;
  return LeibnizAlgebra(std::move(c));
}

LeibnizAlgebra affine_2d() {
  auto c = zero_constants(2);
  c[0][1][1] = 1;
  c[1][0][1] = -1;
  return LeibnizAlgebra(std::move(c));
}

}  // namespace vaisman
