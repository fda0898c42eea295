#ifndef UNIFINT_FINALG_HPP
#define UNIFINT_FINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unifint/terms.hpp"

#include "json.hpp"

namespace unifint {

inline constexpr long long kDefaultElementBudget = 200000;

/// Cap on the entries of any single materialized operation table
/// (size^arity); exceeding it is a budget error, not an attempt.
inline constexpr long long kTableEntryBudget = 50'000'000;

/// A finite algebra: universe 0..n-1 with one total operation table per
/// signature symbol. Tables are stored flat, row-major by argument.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(Signature sig, int size, std::vector<std::vector<int>> tables,
                std::string name = "");

  int size() const { return size_; }
  const Signature& sig() const { return sig_; }
  const std::string& name() const { return name_; }

  int apply(int op, std::span<const int> args) const;
  const std::vector<int>& table(int op) const { return tables_[op]; }

  /// Values of all arity-0 symbols, in signature order.
  std::vector<int> constants() const;

  static FiniteAlgebra from_json(const nlohmann::ordered_json& j);
  nlohmann::ordered_json to_json() const;

 private:
  Signature sig_;
  int size_ = 0;
  std::vector<std::vector<int>> tables_;
  std::string name_;
};

/// Homomorphism interpretation: map[a] is the image of element a. The
/// compatibility equations are checked at construction.
struct Homomorphism {
  const FiniteAlgebra* source = nullptr;
  const FiniteAlgebra* target = nullptr;
  std::vector<int> map;

  bool surjective() const;
  bool injective() const;
};

bool is_homomorphism(const FiniteAlgebra& A, const FiniteAlgebra& B,
                     const std::vector<int>& map);
Homomorphism make_homomorphism(const FiniteAlgebra& A, const FiniteAlgebra& B,
                               std::vector<int> map);
Homomorphism identity_hom(const FiniteAlgebra& A);
Homomorphism compose(const Homomorphism& f, const Homomorphism& g);  // g after f

/// Pointwise power A^e with fully materialized tables. Errors with
/// BudgetError when the element count or any table would exceed the budget.
FiniteAlgebra direct_power(const FiniteAlgebra& A, int exponent,
                           long long budget = kDefaultElementBudget);

FiniteAlgebra direct_product(const FiniteAlgebra& A, const FiniteAlgebra& B,
                             long long budget = kDefaultElementBudget);

/// Subuniverse closure with breadth-first witness terms over the generator
/// labels. Constants are always included.
struct SubalgebraResult {
  std::vector<int> elements;   // ascending element ids of A
  std::map<int, Term> witnesses;
};

SubalgebraResult generated_subalgebra(
    const FiniteAlgebra& A, const std::vector<int>& gens,
    const std::vector<Term>& labels = {},
    long long budget = kDefaultElementBudget);

/// Restriction of A to a subuniverse (re-indexed), with the embedding back.
struct Subalgebra {
  FiniteAlgebra alg;
  std::vector<int> elements;  // sub index -> A index
  Homomorphism embedding;     // note: valid while the owning pair is alive
};
Subalgebra restrict_to(const FiniteAlgebra& A, const std::vector<int>& subuniverse);

/// The free algebra of HSP(G) on an ordered variable list, carried as tuples
/// over all assignments vars -> G. Element i < vars.size() is the i-th
/// projection, witnessed by the variable itself.
struct FreeAlgebra {
  FiniteAlgebra alg;
  const FiniteAlgebra* generator = nullptr;
  std::vector<std::string> vars;
  std::vector<std::vector<int>> tuples;
  std::vector<Term> witnesses;
  std::map<std::vector<int>, int> index;

  int var_element(const std::string& v) const;
  int assignment_count() const;
  /// Value of element e under the assignment with the given index.
  int value_at(int e, int assignment) const { return tuples[e][assignment]; }
  /// Digit of variable j in an assignment index (base generator->size()).
  int assignment_digit(int assignment, int var_pos) const;
};

FreeAlgebra free_algebra(const FiniteAlgebra& G, std::vector<std::string> vars,
                         long long budget = kDefaultElementBudget);

/// Inclusion F(sub.vars) -> F(sup.vars) induced by a variable subset:
/// a sub tuple maps to the sup tuple constant in the extra coordinates.
Homomorphism inclusion_hom(const FreeAlgebra& sub, const FreeAlgebra& sup);

/// Evaluates a term under an assignment of its variables to elements of A.
int evaluate(const Term& t, const FiniteAlgebra& A,
             const std::map<std::string, int>& assignment);

/// Maps an equation to the pair of free-algebra elements its sides denote.
std::pair<int, int> eq_to_pair(const FreeAlgebra& F, const Equation& e);

struct HomSearchResult {
  std::vector<Homomorphism> homs;
  bool truncated = false;
};

/// Backtracks over images of a greedy generating set; complete up to limit.
HomSearchResult all_homomorphisms(const FiniteAlgebra& A,
                                  const FiniteAlgebra& B, size_t limit = 10000);

}  // namespace unifint

#endif
