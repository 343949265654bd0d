#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Nothing here shares code with src/ beyond reading Poly::terms().

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vaisman/gen_section.hpp"
#include "vaisman/poly.hpp"

namespace oracle {

using Q = mpq_class;

/// Sparse polynomial keyed by exponent vector with no ordering guarantees
/// relied upon; every operation is the textbook loop.
struct OPoly {
  std::size_t nvars = 0;
  std::map<std::vector<int>, Q> c;

  explicit OPoly(std::size_t n = 0) : nvars(n) {}

  static OPoly constant(std::size_t n, const Q& q) {
    OPoly p(n);
    if (q != 0) p.c[std::vector<int>(n, 0)] = q;
    return p;
  }
  static OPoly var(std::size_t n, std::size_t slot) {
    OPoly p(n);
    std::vector<int> e(n, 0);
    e[slot] = 1;
    p.c[e] = 1;
    return p;
  }

  void clean() {
    for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  }
  bool zero() const {
    for (const auto& [e, q] : c) {
      if (q != 0) return false;
    }
    return true;
  }
};

inline OPoly operator+(const OPoly& a, const OPoly& b) {
  OPoly r = a;
  for (const auto& [e, q] : b.c) r.c[e] += q;
  r.clean();
  return r;
}
inline OPoly operator-(const OPoly& a, const OPoly& b) {
  OPoly r = a;
  for (const auto& [e, q] : b.c) r.c[e] -= q;
  r.clean();
  return r;
}
inline OPoly operator*(const OPoly& a, const OPoly& b) {
  OPoly r(a.nvars);
  for (const auto& [ea, qa] : a.c) {
    for (const auto& [eb, qb] : b.c) {
      std::vector<int> e(a.nvars);
      for (std::size_t k = 0; k < a.nvars; ++k) e[k] = ea[k] + eb[k];
      r.c[e] += qa * qb;
    }
  }
  r.clean();
  return r;
}
inline OPoly operator*(const Q& s, const OPoly& a) { return OPoly::constant(a.nvars, s) * a; }
inline bool operator==(const OPoly& a, const OPoly& b) { return (a - b).zero(); }

inline OPoly power(const OPoly& a, int k) {
  OPoly r = OPoly::constant(a.nvars, 1);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

/// Term-by-term derivative in slot `s`.
inline OPoly d(const OPoly& a, std::size_t s) {
  OPoly r(a.nvars);
  for (const auto& [e, q] : a.c) {
    if (e[s] == 0) continue;
    std::vector<int> f = e;
    f[s] -= 1;
    r.c[f] += q * e[s];
  }
  r.clean();
  return r;
}

inline OPoly from(const vaisman::Poly& p) {
  OPoly r(p.space().doubled_dim());
  for (const auto& [e, q] : p.terms()) r.c[std::vector<int>(e.begin(), e.end())] = q;
  return r;
}

/// Generalized section as 2D component polynomials: vec then form.
struct OSec {
  std::size_t dim = 0;
  std::vector<OPoly> x;   // X^mu
  std::vector<OPoly> xi;  // xi_mu
};

inline OSec from(const vaisman::GenSection& e) {
  OSec s;
  s.dim = e.dim();
  for (std::size_t mu = 0; mu < s.dim; ++mu) {
    s.x.push_back(from(e.vec(mu)));
    s.xi.push_back(from(e.form(mu)));
  }
  return s;
}

inline bool operator==(const OSec& a, const OSec& b) {
  for (std::size_t mu = 0; mu < a.dim; ++mu) {
    if (!(a.x[mu] == b.x[mu]) || !(a.xi[mu] == b.xi[mu])) return false;
  }
  return true;
}

inline OSec zero_sec(std::size_t dim) {
  OSec s;
  s.dim = dim;
  s.x.assign(dim, OPoly(2 * dim));
  s.xi.assign(dim, OPoly(2 * dim));
  return s;
}

/// Plain derivative d/dx^mu and tilde derivative d/dxt_mu.
inline OPoly dp(const OPoly& a, std::size_t mu) { return d(a, mu); }
inline OPoly dt(const OPoly& a, std::size_t dim, std::size_t mu) { return d(a, dim + mu); }

inline OPoly pairing(const OSec& a, const OSec& b) {
  OPoly r(2 * a.dim);
  for (std::size_t mu = 0; mu < a.dim; ++mu) r = r + a.x[mu] * b.xi[mu] + b.x[mu] * a.xi[mu];
  return r;
}

/// Dorfman bracket from the Cartan formula L_X xi = i_X d xi + d i_X xi,
/// written out over plain derivatives only.
inline OSec dorfman(const OSec& a, const OSec& b) {
  const std::size_t n = a.dim;
  OSec r = zero_sec(n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) {
      r.x[mu] = r.x[mu] + a.x[nu] * dp(b.x[mu], nu) - b.x[nu] * dp(a.x[mu], nu);
    }
  }
  // (d xi)_{nu mu} = d_nu xi_mu - d_mu xi_nu ; (i_X w)_mu = X^nu w_{nu mu}
  auto contract_d = [&](const OSec& vec_from, const OSec& form_from, std::size_t mu) {
    OPoly out(2 * n);
    for (std::size_t nu = 0; nu < n; ++nu) {
      out = out + vec_from.x[nu] * (dp(form_from.xi[mu], nu) - dp(form_from.xi[nu], mu));
    }
    return out;
  };
  OPoly ixi(2 * n);
  for (std::size_t nu = 0; nu < n; ++nu) ixi = ixi + a.x[nu] * b.xi[nu];
  for (std::size_t mu = 0; mu < n; ++mu) {
    const OPoly lie = contract_d(a, b, mu) + dp(ixi, mu);
    r.xi[mu] = lie - contract_d(b, a, mu);
  }
  return r;
}

/// O(D,D) D-bracket written over 2D components V^M = (X^mu, xi_mu) with
/// derivatives d_M = (d_mu, dt^mu) and eta pairing slot M with M +- D:
///   [[V, W]]^M = V^N d_N W^M - W^N d_N V^M + eta^{MN} eta_{PQ} W^Q d_N V^P
inline OSec d_bracket(const OSec& a, const OSec& b) {
  const std::size_t n = a.dim;
  auto comp = [&](const OSec& s, std::size_t m) { return m < n ? s.x[m] : s.xi[m - n]; };
  auto der = [&](const OPoly& p, std::size_t m) { return m < n ? dp(p, m) : dt(p, n, m - n); };
  auto partner = [&](std::size_t m) { return m < n ? m + n : m - n; };
  OSec r = zero_sec(n);
  for (std::size_t m = 0; m < 2 * n; ++m) {
    OPoly out(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      out = out + comp(a, k) * der(comp(b, m), k) - comp(b, k) * der(comp(a, m), k);
    }
    const std::size_t k = partner(m);  // eta^{MN} picks N = partner(M)
    for (std::size_t p = 0; p < 2 * n; ++p) {
      out = out + comp(b, partner(p)) * der(comp(a, p), k);
    }
    if (m < n) r.x[m] = out; else r.xi[m - n] = out;
  }
  return r;
}

/// Doubled anchor X^mu d_mu f + xi_mu dt^mu f.
inline OPoly anchor(const OSec& a, const OPoly& f) {
  OPoly out(f.nvars);
  for (std::size_t mu = 0; mu < a.dim; ++mu) out = out + a.x[mu] * dp(f, mu) + a.xi[mu] * dt(f, a.dim, mu);
  return out;
}

}  // namespace oracle
