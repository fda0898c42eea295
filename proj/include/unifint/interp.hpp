#ifndef UNIFINT_INTERP_HPP
#define UNIFINT_INTERP_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "unifint/lifting.hpp"

namespace unifint {

/// Equational consequence engine for a locally finite variety HSP(G), with a
/// cache of free algebras keyed by the exact ordered variable list. Queries
/// are pure given a cache snapshot; the cache is append-only under a lock.
class VarietyEngine {
 public:
  explicit VarietyEngine(FiniteAlgebra generator,
                         long long budget = kDefaultElementBudget);

  const FiniteAlgebra& generator() const { return generator_; }
  long long budget() const { return budget_; }

  const FreeAlgebra& free(const std::vector<std::string>& vars);

  /// Enumerated Con F(vars), cached.
  const CongruenceLattice& con_free(const std::vector<std::string>& vars,
                                    int limit = 20000);

 private:
  FiniteAlgebra generator_;
  long long budget_;
  std::mutex mutex_;
  std::map<std::vector<std::string>, std::unique_ptr<FreeAlgebra>> cache_;
  std::map<std::vector<std::string>, std::unique_ptr<CongruenceLattice>>
      con_cache_;
};

/// Union of the declared variable lists, preserving first-seen order.
std::vector<std::string> merged_vars(const EquationSet& a,
                                     const EquationSet& b);

/// Sigma entails Delta over HSP(G): Cg(Delta) <= Cg(Sigma) on the free
/// algebra over the union of the declared variables.
bool entails(VarietyEngine& V, const EquationSet& sigma,
             const EquationSet& delta);

struct InterpolantResult {
  EquationSet pi;
  std::vector<std::string> eliminated;
  std::string kind;  // "right" | "left" | "maehara-residual"
  bool ok = true;
  std::string diagnostic;  // failure detail for the left case
};

/// Right uniform interpolant: generators of the inverse image of Cg(Sigma)
/// along the free-algebra inclusion, rendered via witness terms.
InterpolantResult right_uniform_interpolant(
    VarietyEngine& V, const EquationSet& sigma,
    const std::vector<std::string>& eliminate);

/// Left uniform interpolant via the left adjoint of the compact lifting;
/// reports failure (with the meet candidate) when the adjoint is missing at
/// this congruence.
InterpolantResult left_uniform_interpolant(
    VarietyEngine& V, const EquationSet& delta,
    const std::vector<std::string>& eliminate);

struct VerifySummary {
  bool pass = true;
  long long checked = 0;
  std::string witness;
};

/// Checks Sigma |= eps <=> Pi |= eps for every equation eps over the kept
/// variables plus fresh_budget fresh ones (eps ranges over all ordered
/// element pairs of that free algebra).
VerifySummary verify_right_interpolant(VarietyEngine& V,
                                       const EquationSet& sigma,
                                       const InterpolantResult& result,
                                       int fresh_budget = 1);

/// Checks Gamma |= Delta <=> Gamma |= Pi for every principal Gamma over the
/// kept variables plus fresh_budget fresh ones, plus a sample of 2-generator
/// Gammas.
VerifySummary verify_left_interpolant(VarietyEngine& V,
                                      const EquationSet& delta,
                                      const InterpolantResult& result,
                                      int fresh_budget = 1,
                                      unsigned long long seed = 1);

struct DipSquareResult {
  bool pass = true;
  long long checked = 0;
  std::string witness;  // failing congruence when !pass
};

/// Commutation of inverse images and direct images of the four free-algebra
/// inclusions, for every congruence on F(xs, ys).
DipSquareResult dip_square_check(VarietyEngine& V,
                                 const std::vector<std::string>& xs,
                                 const std::vector<std::string>& ys,
                                 const std::vector<std::string>& zs);

/// Residual-based interpolant: Pi generates Cg(Delta) - Cg(Sigma) on the
/// common free algebra; reports failure when the residual does not exist.
InterpolantResult maehara_residual_interpolant(VarietyEngine& V,
                                               const EquationSet& sigma,
                                               const EquationSet& delta);

/// Fresh variable names that clash neither with existing variables nor with
/// operation symbols.
std::vector<std::string> fresh_vars(const Signature& sig,
                                    const std::vector<std::string>& taken,
                                    int count);

/// Renders a congruence's minimal generators as equations between witness
/// terms of the free algebra.
EquationSet render_congruence(const FreeAlgebra& F, const Congruence& theta);

}  // namespace unifint

#endif
