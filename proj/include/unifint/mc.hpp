#ifndef UNIFINT_MC_HPP
#define UNIFINT_MC_HPP

#include <optional>
#include <string>
#include <vector>

#include "unifint/interp.hpp"

namespace unifint {

/// One axiom index j = (Gamma, Delta_1..Delta_n, x) together with the derived
/// data Sigma (generating the restriction of theta_Gamma) and Pi_1..Pi_n
/// (generating the left adjoint at each residual theta_Delta_m - theta_Gamma).
struct AxiomDatum {
  EquationSet gamma;
  std::vector<EquationSet> deltas;
  std::string x;
  std::vector<std::string> xbar;  // declared variables, x included
  std::vector<std::string> zbar;  // xbar without x
  EquationSet sigma;
  std::vector<EquationSet> pis;
};

/// Restricted first-order syntax: exactly what the axioms need.
struct FOFormula {
  enum class Kind { True, Eq, Not, And, Implies, Exists };
  Kind kind = Kind::True;
  std::optional<Equation> eq;        // Eq
  std::string var;                   // Exists
  std::vector<FOFormula> children;   // Not: 1, And: any, Implies: 2, Exists: 1
};

std::string to_string(const FOFormula& f);

/// Derives Sigma and the Pi_m from the congruence lattices of F(xbar) and
/// F(zbar). Throws std::runtime_error with a distinct message when a residual
/// or a left adjoint is missing; BudgetError propagates.
AxiomDatum build_axiom_datum(VarietyEngine& V, const EquationSet& gamma,
                             const std::vector<EquationSet>& deltas,
                             const std::string& x);

/// phi_(Sigma,Pi_1..Pi_n) -> exists x . phi_(Gamma,Delta_1..Delta_n).
FOFormula emit_axiom(const AxiomDatum& d);

/// Membership of a finite algebra in the variety, checked as: evaluation of
/// the witness terms of F(x_1..x_k) pointwise over all k-assignments into M
/// is a homomorphism (all identities of the generator in at most k variables
/// hold in M).
bool in_variety(VarietyEngine& V, const FiniteAlgebra& M, int k);

struct QuantElimReport {
  bool pass = true;
  long long assignments = 0;  // total assignments swept across all models
  std::string witness;        // failing model/assignment description
};

/// The quantifier-elimination direction: on every supplied model, every
/// assignment satisfying phi_(Gamma,Delta-bar) also satisfies
/// phi_(Sigma,Pi-bar) on the remaining variables. Models outside the variety
/// are rejected via the witness.
QuantElimReport verify_quantelim_direction(
    VarietyEngine& V, const AxiomDatum& d,
    const std::vector<const FiniteAlgebra*>& models);

struct CotheoryReport {
  bool pass = false;
  bool precondition_ok = false;  // f' satisfies phi_(Sigma,Pi-bar) in A'
  bool surjective_case = true;   // induced hom F(zbar) -> A' is onto
  bool injective = false;        // the constructed embedding
  int quotient_size = 0;         // |A| = |F(xbar)/theta|
  std::vector<int> embedding;    // iota: A' -> A when built
  int witness_x = -1;            // image of x in A
  std::string detail;
};

/// The embedding construction: theta = theta_Gamma v i*(ker f-hat') on
/// F(xbar), A = F(xbar)/theta, iota: A' -> A; checks i^{-1}(theta) equals
/// ker f-hat' (well-definedness and injectivity) and that the extended
/// assignment satisfies phi_(Gamma,Delta-bar). Only the surjective f-hat'
/// case is constructed; the general case is reported, not guessed.
CotheoryReport verify_cotheory_instance(VarietyEngine& V, const AxiomDatum& d,
                                        const FiniteAlgebra& Aprime,
                                        const std::map<std::string, int>& fprime);

}  // namespace unifint

#endif
