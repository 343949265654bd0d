#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vaisman/gen_section.hpp"

namespace vaisman {

enum class BracketKind { dorfman, d_bracket, c_bracket };

std::string_view to_string(BracketKind kind);
/// Accepts dorfman, d, dbracket, c, cbracket.
std::optional<BracketKind> parse_bracket_kind(std::string_view name);

/// eta(e1, e2) = X1^mu xi2_mu + X2^mu xi1_mu.
Poly pairing(const GenSection& e1, const GenSection& e2);

/// Doubled anchor: rho(e) f = X^mu d_mu f + xi_mu dt^mu f.
Poly anchor_apply(const GenSection& e, const Poly& f);

/// Doubled generalized derivative: vec part dt^mu f, form part d_mu f.
GenSection gen_derivative(const Poly& f);

/// Anchor and generalized derivative of the algebroid a bracket kind lives
/// on. The Dorfman bracket pairs with the standard anchor X + xi -> X and
/// with D f = df; the tilde coordinates are then inert parameters. The D-
/// and C-brackets use the doubled operators above.
Poly anchor_apply(BracketKind kind, const GenSection& e, const Poly& f);
GenSection gen_derivative(BracketKind kind, const Poly& f);

GenSection bracket(BracketKind kind, const GenSection& e1, const GenSection& e2);

/// Standard Courant bracket [X1,X2] + L_{X1} xi2 - i_{X2} d xi1 from
/// plain derivatives only.
GenSection dorfman_bracket(const GenSection& e1, const GenSection& e2);

/// Generalized Lie derivative in O(D,D) covariant form:
///   e1^N d_N e2^M - e2^N d_N e1^M + eta^{MN} eta_{PQ} e2^Q d_N e1^P.
GenSection d_bracket(const GenSection& e1, const GenSection& e2);

/// Antisymmetrization of the D-bracket.
GenSection c_bracket(const GenSection& e1, const GenSection& e2);

/// D-bracket assembled from its named pieces,
///   [X1,X2]_+ + L_{xi1} X2 - i_{xi2} d* X1 + [xi1,xi2]_- + L_{X1} xi2 - i_{X2} d xi1,
/// each piece computed by the Cartan-style helpers below.
GenSection d_bracket_termwise(const GenSection& e1, const GenSection& e2);

/// Component-level Cartan calculus on one half of the doubled space. A
/// "vector" here is a D-tuple differentiated along `sector` and acting on a
/// "dual" D-tuple. With sector == plain these are the ordinary operations on
/// vector fields and 1-forms; with sector == tilde they are the mirror
/// operations (roles of X and xi swapped).
namespace cartan {

using Components = std::vector<Poly>;

/// [U, V]^mu = U^nu d_nu V^mu - V^nu d_nu U^mu.
Components lie_bracket(const Components& u, const Components& v, Sector sector);
/// (L_U a)_mu = U^nu d_nu a_mu + a_nu d_mu U^nu.
Components lie_derivative(const Components& u, const Components& a, Sector sector);
/// (i_U d a)_mu = U^nu (d_nu a_mu - d_mu a_nu).
Components contract_exterior(const Components& u, const Components& a, Sector sector);
/// (d g)_mu = d_mu g.
Components exterior(const Poly& g, Sector sector);
/// i_U a = U^mu a_mu.
Poly contract(const Components& u, const Components& a);

}  // namespace cartan

}  // namespace vaisman
