#ifndef UNIFINT_LATTICE_HPP
#define UNIFINT_LATTICE_HPP

#include <optional>
#include <vector>

namespace unifint {

/// A finite lattice given by its order relation; join/meet tables are
/// computed (and their existence validated) at construction.
struct FiniteLattice {
  int size = 0;
  std::vector<char> leq;   // size*size, leq[a*size+b] iff a <= b
  std::vector<int> joins;  // size*size
  std::vector<int> meets;  // size*size

  bool le(int a, int b) const { return leq[a * size + b] != 0; }
  int join(int a, int b) const { return joins[a * size + b]; }
  int meet(int a, int b) const { return meets[a * size + b]; }
  int bottom() const;
  int top() const;

  static FiniteLattice from_leq(int size, std::vector<char> leq);
};

/// Least c with a <= b v c, when it exists.
std::optional<int> residual(const FiniteLattice& L, int a, int b);

struct LatticeCheck {
  bool ok = true;
  std::vector<int> witness;  // failing pair/triple when !ok
};

LatticeCheck is_distributive(const FiniteLattice& L);
LatticeCheck is_dually_brouwerian(const FiniteLattice& L);

/// Elements a such that every join-closed, downward-closed D whose join
/// dominates a already contains an element above a. In a finite lattice this
/// is everything; kept as an independent check for interval assertions.
std::vector<int> compact_elements(const FiniteLattice& L);

/// The sublattice on an up-interval [k, top], re-indexed.
FiniteLattice interval_above(const FiniteLattice& L, int k,
                             std::vector<int>* elements = nullptr);

}  // namespace unifint

#endif
