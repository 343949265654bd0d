#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vaisman/calculus.hpp"

namespace vaisman {

/// Inputs an axiom was evaluated on, kept so every verdict can be replayed.
struct Witness {
  std::vector<GenSection> sections;
  std::optional<Poly> function;
};

using Residual = std::variant<GenSection, Poly>;

bool residual_is_zero(const Residual& r);

struct ResidualReport {
  std::string axiom;
  BracketKind kind = BracketKind::dorfman;
  Residual residual;
  bool is_zero = false;
  Witness witness;
  /// Anchor homomorphism only: the probe-function residual
  /// rho([e1,e2]) f - [rho e1, rho e2] f, reported next to the exact
  /// operator-coefficient residual that decides the verdict.
  std::optional<Poly> probe_residual;
};

/// [e1,[e2,e3]] - [[e1,e2],e3] - [e2,[e1,e3]].
GenSection leibniz_defect(BracketKind kind, const GenSection& e1, const GenSection& e2,
                          const GenSection& e3);
ResidualReport leibniz_residual(BracketKind kind, const GenSection& e1, const GenSection& e2,
                                const GenSection& e3);

/// The anchor of `e` as a vector field on the doubled space: plain-direction
/// coefficients in the vec slots, tilde-direction coefficients in the form
/// slots.
GenSection anchor_vector_field(BracketKind kind, const GenSection& e);
/// Commutator of two first-order operators given by their coefficients.
GenSection vector_field_commutator(const GenSection& u, const GenSection& v);

/// Axioms 1-5 of a Courant algebroid for the given bracket and its anchor.
std::vector<ResidualReport> check_courant(BracketKind kind, const GenSection& e1,
                                          const GenSection& e2, const GenSection& e3,
                                          const Poly& f);
/// Leibniz rule and metric compatibility only.
std::vector<ResidualReport> check_vaisman(BracketKind kind, const GenSection& e1,
                                          const GenSection& e2, const GenSection& e3,
                                          const Poly& f);
/// D-bracket minus Dorfman bracket on strong-constraint projected inputs.
ResidualReport check_reduction(const GenSection& e1, const GenSection& e2);

bool all_zero(const std::vector<ResidualReport>& reports);

/// A curated D-bracket Leibniz-identity counterexample.
struct PinnedWitness {
  std::string name;
  GenSection e1, e2, e3;
  Poly f;
};

const std::vector<PinnedWitness>& pinned_witnesses();
std::optional<PinnedWitness> find_pinned_witness(const std::string& name);

}  // namespace vaisman
