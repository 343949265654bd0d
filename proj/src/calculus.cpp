#include "vaisman/calculus.hpp"

namespace vaisman {

std::string_view to_string(BracketKind kind) {
  switch (kind) {
    case BracketKind::dorfman: return "dorfman";
    case BracketKind::d_bracket: return "d";
    case BracketKind::c_bracket: return "c";
  }
  return "unknown";
}

std::optional<BracketKind> parse_bracket_kind(std::string_view name) {
  if (name == "dorfman") return BracketKind::dorfman;
  if (name == "d" || name == "dbracket") return BracketKind::d_bracket;
  if (name == "c" || name == "cbracket") return BracketKind::c_bracket;
  return std::nullopt;
}

namespace {

void require_same_space(const GenSection& a, const GenSection& b) {
  if (!(a.space() == b.space())) {
    throw SpaceMismatch("sections over doubled spaces of different dimension (" +
                        std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_same_space(const GenSection& e, const Poly& f) {
  if (!(e.space() == f.space())) {
    throw SpaceMismatch("section and function over doubled spaces of different dimension");
  }
}

// d_N for N in 0..2D-1: plain directions first, then tilde directions.
Poly doubled_partial(const Poly& p, std::size_t n) {
  const std::size_t dim = p.space().dim();
  return n < dim ? partial(p, Sector::plain, n + 1) : partial(p, Sector::tilde, n - dim + 1);
}

// O(D,D) partner slot: eta pairs vector slot mu with form slot mu.
std::size_t partner(std::size_t m, std::size_t dim) { return m < dim ? m + dim : m - dim; }

// table[N][M] = d_N e^M
std::vector<std::vector<Poly>> jacobian(const GenSection& e) {
  const std::size_t n2 = e.space().doubled_dim();
  std::vector<std::vector<Poly>> out(n2);
  for (std::size_t n = 0; n < n2; ++n) {
    out[n].reserve(n2);
    for (std::size_t m = 0; m < n2; ++m) out[n].push_back(doubled_partial(e.component(m), n));
  }
  return out;
}

}  // namespace

Poly pairing(const GenSection& e1, const GenSection& e2) {
  require_same_space(e1, e2);
  Poly out(e1.space());
  for (std::size_t mu = 0; mu < e1.dim(); ++mu) {
    out += e1.vec(mu) * e2.form(mu);
    out += e2.vec(mu) * e1.form(mu);
  }
  return out;
}

Poly anchor_apply(const GenSection& e, const Poly& f) {
  require_same_space(e, f);
  Poly out(e.space());
  for (std::size_t mu = 0; mu < e.dim(); ++mu) {
    out += e.vec(mu) * partial(f, Sector::plain, mu + 1);
    out += e.form(mu) * partial(f, Sector::tilde, mu + 1);
  }
  return out;
}

GenSection gen_derivative(const Poly& f) {
  GenSection out(f.space());
  for (std::size_t mu = 0; mu < out.dim(); ++mu) {
    out.vec(mu) = partial(f, Sector::tilde, mu + 1);
    out.form(mu) = partial(f, Sector::plain, mu + 1);
  }
  return out;
}

Poly anchor_apply(BracketKind kind, const GenSection& e, const Poly& f) {
  if (kind != BracketKind::dorfman) return anchor_apply(e, f);
  require_same_space(e, f);
  Poly out(e.space());
  for (std::size_t mu = 0; mu < e.dim(); ++mu) {
    out += e.vec(mu) * partial(f, Sector::plain, mu + 1);
  }
  return out;
}

GenSection gen_derivative(BracketKind kind, const Poly& f) {
  if (kind != BracketKind::dorfman) return gen_derivative(f);
  GenSection out(f.space());
  for (std::size_t mu = 0; mu < out.dim(); ++mu) out.form(mu) = partial(f, Sector::plain, mu + 1);
  return out;
}

GenSection bracket(BracketKind kind, const GenSection& e1, const GenSection& e2) {
  switch (kind) {
    case BracketKind::dorfman: return dorfman_bracket(e1, e2);
    case BracketKind::d_bracket: return d_bracket(e1, e2);
    case BracketKind::c_bracket: return c_bracket(e1, e2);
  }
  throw std::invalid_argument("unknown bracket kind");
}

GenSection dorfman_bracket(const GenSection& e1, const GenSection& e2) {
  require_same_space(e1, e2);
  using namespace cartan;
  Components vec = lie_bracket(e1.vec(), e2.vec(), Sector::plain);
  Components form = lie_derivative(e1.vec(), e2.form(), Sector::plain);
  const Components tail = contract_exterior(e2.vec(), e1.form(), Sector::plain);
  for (std::size_t mu = 0; mu < form.size(); ++mu) form[mu] -= tail[mu];
  return GenSection(std::move(vec), std::move(form));
}

GenSection d_bracket(const GenSection& e1, const GenSection& e2) {
  require_same_space(e1, e2);
  const std::size_t dim = e1.dim();
  const std::size_t n2 = 2 * dim;
  const auto j1 = jacobian(e1);
  const auto j2 = jacobian(e2);
  GenSection out(e1.space());
  for (std::size_t m = 0; m < n2; ++m) {
    Poly acc(e1.space());
    for (std::size_t n = 0; n < n2; ++n) {
      acc += e1.component(n) * j2[n][m];
      acc -= e2.component(n) * j1[n][m];
    }
    const std::size_t n = partner(m, dim);
    for (std::size_t p = 0; p < n2; ++p) acc += j1[n][p] * e2.component(partner(p, dim));
    out.component(m) = std::move(acc);
  }
  return out;
}

GenSection c_bracket(const GenSection& e1, const GenSection& e2) {
  GenSection out = d_bracket(e1, e2) - d_bracket(e2, e1);
  out *= Rational(1, 2);
  return out;
}

GenSection d_bracket_termwise(const GenSection& e1, const GenSection& e2) {
  require_same_space(e1, e2);
  using namespace cartan;
  const Components& x1 = e1.vec();
  const Components& x2 = e2.vec();
  const Components& xi1 = e1.form();
  const Components& xi2 = e2.form();

  // Vector line: plain Lie bracket plus the tilde mirrors acting on vectors.
  const Components lie_plus = lie_bracket(x1, x2, Sector::plain);
  const Components l_xi1_x2 = lie_derivative(xi1, x2, Sector::tilde);
  const Components i_xi2_dstar_x1 = contract_exterior(xi2, x1, Sector::tilde);
  // Form line: tilde Lie bracket of forms plus the standard Cartan pieces.
  const Components lie_minus = lie_bracket(xi1, xi2, Sector::tilde);
  const Components l_x1_xi2 = lie_derivative(x1, xi2, Sector::plain);
  const Components i_x2_d_xi1 = contract_exterior(x2, xi1, Sector::plain);

  GenSection out(e1.space());
  for (std::size_t mu = 0; mu < e1.dim(); ++mu) {
    out.vec(mu) = lie_plus[mu] + l_xi1_x2[mu] - i_xi2_dstar_x1[mu];
    out.form(mu) = lie_minus[mu] + l_x1_xi2[mu] - i_x2_d_xi1[mu];
  }
  return out;
}

namespace cartan {

namespace {
Poly d(const Poly& p, Sector sector, std::size_t mu) { return partial(p, sector, mu + 1); }
}  // namespace

Components lie_bracket(const Components& u, const Components& v, Sector sector) {
  const auto& space = u.at(0).space();
  Components out(u.size(), Poly(space));
  for (std::size_t mu = 0; mu < u.size(); ++mu) {
    for (std::size_t nu = 0; nu < u.size(); ++nu) {
      out[mu] += u[nu] * d(v[mu], sector, nu);
      out[mu] -= v[nu] * d(u[mu], sector, nu);
    }
  }
  return out;
}

Components lie_derivative(const Components& u, const Components& a, Sector sector) {
  const auto& space = u.at(0).space();
  Components out(u.size(), Poly(space));
  for (std::size_t mu = 0; mu < u.size(); ++mu) {
    for (std::size_t nu = 0; nu < u.size(); ++nu) {
      out[mu] += u[nu] * d(a[mu], sector, nu);
      out[mu] += a[nu] * d(u[nu], sector, mu);
    }
  }
  return out;
}

Components contract_exterior(const Components& u, const Components& a, Sector sector) {
  const auto& space = u.at(0).space();
  Components out(u.size(), Poly(space));
  for (std::size_t mu = 0; mu < u.size(); ++mu) {
    for (std::size_t nu = 0; nu < u.size(); ++nu) {
      out[mu] += u[nu] * (d(a[mu], sector, nu) - d(a[nu], sector, mu));
    }
  }
  return out;
}

Components exterior(const Poly& g, Sector sector) {
  Components out;
  for (std::size_t mu = 0; mu < g.space().dim(); ++mu) out.push_back(d(g, sector, mu));
  return out;
}

Poly contract(const Components& u, const Components& a) {
  Poly out(u.at(0).space());
  for (std::size_t mu = 0; mu < u.size(); ++mu) out += u[mu] * a[mu];
  return out;
}

}  // namespace cartan

}  // namespace vaisman
