#ifndef UNIFINT_CONGR_HPP
#define UNIFINT_CONGR_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "unifint/finalg.hpp"
#include "unifint/lattice.hpp"

namespace unifint {

/// A congruence in canonical form: rep[a] is the minimum element of a's
/// block. Optionally carries a generating pair set.
class Congruence {
 public:
  Congruence() = default;
  Congruence(const FiniteAlgebra* alg, std::vector<int> rep,
             std::optional<std::vector<std::pair<int, int>>> gens = std::nullopt);

  const FiniteAlgebra* algebra() const { return alg_; }
  int size() const { return static_cast<int>(rep_.size()); }
  int rep(int a) const { return rep_[a]; }
  bool related(int a, int b) const { return rep_[a] == rep_[b]; }
  const std::vector<int>& rep_vector() const { return rep_; }
  const std::optional<std::vector<std::pair<int, int>>>& generators() const {
    return gens_;
  }

  /// Blocks ordered by representative; singletons included.
  std::vector<std::vector<int>> blocks() const;
  int block_count() const;
  bool is_diagonal() const;
  bool is_full() const;

  /// All related pairs (a, b) with a < b.
  std::vector<std::pair<int, int>> pairs() const;

  /// Containment as relations.
  bool leq(const Congruence& other) const;

  bool operator==(const Congruence& o) const { return rep_ == o.rep_; }
  bool operator<(const Congruence& o) const { return rep_ < o.rep_; }

  static Congruence diagonal(const FiniteAlgebra& A);
  static Congruence full(const FiniteAlgebra& A);

  std::string to_string() const;  // e.g. "{{0,3},{1},{2}}"

 private:
  const FiniteAlgebra* alg_ = nullptr;
  std::vector<int> rep_;
  std::optional<std::vector<std::pair<int, int>>> gens_;
};

/// Least congruence containing S: union-find seeded with S, then operation
/// propagation over one-coordinate contexts to fixpoint.
Congruence cg(const FiniteAlgebra& A,
              std::span<const std::pair<int, int>> S);
Congruence cg(const FiniteAlgebra& A,
              std::initializer_list<std::pair<int, int>> S);

/// Join of congruences (transitive closure of the union, which is already
/// compatible) and meet (intersection of the relations).
Congruence join(const Congruence& a, const Congruence& b);
Congruence meet(const Congruence& a, const Congruence& b);

/// Kernel of a homomorphism.
Congruence kernel(const Homomorphism& h);

/// Quotient algebra and canonical surjection; block indices are ordered by
/// block representative.
struct QuotientResult {
  FiniteAlgebra algebra;
  std::vector<int> proj;  // element -> block index
};
QuotientResult quotient(const FiniteAlgebra& A, const Congruence& theta);

/// All congruences of A, enumerated as the join-closure of principal
/// congruences, with the containment lattice.
struct CongruenceLattice {
  const FiniteAlgebra* alg = nullptr;
  std::vector<Congruence> congs;  // sorted by canonical rep vector
  FiniteLattice lattice;

  int index_of(const Congruence& c) const;
  int bottom_index() const;
  int top_index() const;
};

CongruenceLattice con_lattice(const FiniteAlgebra& A, int limit = 20000);

/// Greedy generating set for a congruence: seed with all (block rep, member)
/// pairs, drop from lexicographically largest to smallest whenever the
/// closure is preserved. Deterministic; favors lexicographically small pairs.
std::vector<std::pair<int, int>> minimal_generators(const FiniteAlgebra& A,
                                                    const Congruence& theta);

struct CepResult {
  bool ok = true;
  std::vector<int> sub_universe;  // witness on failure
  std::pair<int, int> pair{-1, -1};
};

/// Congruence extension check over all generated subalgebras and principal
/// congruences. A principal cg_B(a,b) extends iff the least candidate
/// cg_A(a,b) restricts back to it exactly.
CepResult cep_check(const FiniteAlgebra& A, int sub_limit = 10000);

/// All subuniverses of A (closures of subsets), deduplicated, each sorted.
std::vector<std::vector<int>> all_subuniverses(const FiniteAlgebra& A,
                                               int limit = 10000);

}  // namespace unifint

#endif
