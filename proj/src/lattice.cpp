#include "unifint/lattice.hpp"

#include <stdexcept>
#include <string>

namespace unifint {

int FiniteLattice::bottom() const {
  for (int a = 0; a < size; ++a) {
    bool all = true;
    for (int b = 0; b < size && all; ++b) all = le(a, b);
    if (all) return a;
  }
  throw std::logic_error("lattice has no bottom");
}

int FiniteLattice::top() const {
  for (int a = 0; a < size; ++a) {
    bool all = true;
    for (int b = 0; b < size && all; ++b) all = le(b, a);
    if (all) return a;
  }
  throw std::logic_error("lattice has no top");
}

FiniteLattice FiniteLattice::from_leq(int size, std::vector<char> leq) {
  FiniteLattice L;
  L.size = size;
  L.leq = std::move(leq);
  if (L.leq.size() != static_cast<size_t>(size) * size)
    throw std::invalid_argument("leq matrix size mismatch");
  // Partial-order sanity.
  for (int a = 0; a < size; ++a) {
    if (!L.le(a, a)) throw std::invalid_argument("order not reflexive");
    for (int b = 0; b < size; ++b) {
      if (a != b && L.le(a, b) && L.le(b, a))
        throw std::invalid_argument("order not antisymmetric");
      for (int c = 0; c < size; ++c)
        if (L.le(a, b) && L.le(b, c) && !L.le(a, c))
          throw std::invalid_argument("order not transitive");
    }
  }
  L.joins.assign(static_cast<size_t>(size) * size, -1);
  L.meets.assign(static_cast<size_t>(size) * size, -1);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      int j = -1, m = -1;
      for (int c = 0; c < size; ++c) {
        if (L.le(a, c) && L.le(b, c) && (j < 0 || L.le(c, j))) j = c;
        if (L.le(c, a) && L.le(c, b) && (m < 0 || L.le(m, c))) m = c;
      }
      // Verify least/greatest, not just minimal/maximal.
      for (int c = 0; c < size; ++c) {
        if (L.le(a, c) && L.le(b, c) && !L.le(j, c)) j = -1;
        if (L.le(c, a) && L.le(c, b) && !L.le(c, m)) m = -1;
        if (j < 0 || m < 0) break;
      }
      if (j < 0 || m < 0)
        throw std::invalid_argument("not a lattice: missing join or meet of " +
                                    std::to_string(a) + "," + std::to_string(b));
      L.joins[a * size + b] = j;
      L.meets[a * size + b] = m;
    }
  return L;
}

std::optional<int> residual(const FiniteLattice& L, int a, int b) {
  // Meet of all c with a <= b v c; the least such c exists iff the meet
  // itself qualifies.
  int m = -1;
  for (int c = 0; c < L.size; ++c) {
    if (!L.le(a, L.join(b, c))) continue;
    m = m < 0 ? c : L.meet(m, c);
  }
  if (m < 0) return std::nullopt;  // cannot happen: c = top qualifies
  if (!L.le(a, L.join(b, m))) return std::nullopt;
  return m;
}

LatticeCheck is_distributive(const FiniteLattice& L) {
  for (int a = 0; a < L.size; ++a)
    for (int b = 0; b < L.size; ++b)
      for (int c = 0; c < L.size; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return {false, {a, b, c}};
  return {};
}

LatticeCheck is_dually_brouwerian(const FiniteLattice& L) {
  for (int a = 0; a < L.size; ++a)
    for (int b = 0; b < L.size; ++b)
      if (!residual(L, a, b)) return {false, {a, b}};
  return {};
}

std::vector<int> compact_elements(const FiniteLattice& L) {
  if (L.size > 16)
    throw std::invalid_argument("compact_elements: direct check limited to 16 elements");
  // Enumerate ideals (down-closed, join-closed subsets) by bitmask.
  std::vector<unsigned> ideals;
  unsigned total = 1u << L.size;
  for (unsigned s = 1; s < total; ++s) {
    bool ok = true;
    for (int a = 0; a < L.size && ok; ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = 0; b < L.size && ok; ++b) {
        if (L.le(b, a) && !(s >> b & 1)) ok = false;
        if ((s >> b & 1) && !(s >> L.join(a, b) & 1)) ok = false;
      }
    }
    if (ok) ideals.push_back(s);
  }
  auto join_of = [&](unsigned s) {
    int j = -1;
    for (int a = 0; a < L.size; ++a)
      if (s >> a & 1) j = j < 0 ? a : L.join(j, a);
    return j;
  };
  std::vector<int> out;
  for (int a = 0; a < L.size; ++a) {
    bool compact = true;
    for (unsigned s : ideals) {
      if (!L.le(a, join_of(s))) continue;
      bool dominated = false;
      for (int d = 0; d < L.size && !dominated; ++d)
        if ((s >> d & 1) && L.le(a, d)) dominated = true;
      if (!dominated) { compact = false; break; }
    }
    if (compact) out.push_back(a);
  }
  return out;
}

FiniteLattice interval_above(const FiniteLattice& L, int k,
                             std::vector<int>* elements) {
  std::vector<int> elems;
  for (int a = 0; a < L.size; ++a)
    if (L.le(k, a)) elems.push_back(a);
  int n = static_cast<int>(elems.size());
  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[i * n + j] = L.le(elems[i], elems[j]) ? 1 : 0;
  if (elements) *elements = elems;
  return FiniteLattice::from_leq(n, std::move(leq));
}

}  // namespace unifint
