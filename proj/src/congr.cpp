#include "unifint/congr.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace unifint {

namespace {

// Union-find attaching larger roots below smaller ones, so every root is the
// minimum of its class and find() yields canonical representatives directly.
struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) {
      p[x] = p[p[x]];
      x = p[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    p[b] = a;
    return true;
  }
};

std::vector<int> normalized_reps(UnionFind& uf) {
  std::vector<int> rep(uf.p.size());
  for (size_t i = 0; i < rep.size(); ++i) rep[i] = uf.find(static_cast<int>(i));
  return rep;
}

}  // namespace

Congruence::Congruence(const FiniteAlgebra* alg, std::vector<int> rep,
                       std::optional<std::vector<std::pair<int, int>>> gens)
    : alg_(alg), rep_(std::move(rep)), gens_(std::move(gens)) {}

std::vector<std::vector<int>> Congruence::blocks() const {
  std::map<int, std::vector<int>> by_rep;
  for (int a = 0; a < size(); ++a) by_rep[rep_[a]].push_back(a);
  std::vector<std::vector<int>> out;
  for (auto& [r, blk] : by_rep) out.push_back(std::move(blk));
  return out;
}

int Congruence::block_count() const {
  int c = 0;
  for (int a = 0; a < size(); ++a)
    if (rep_[a] == a) ++c;
  return c;
}

bool Congruence::is_diagonal() const {
  for (int a = 0; a < size(); ++a)
    if (rep_[a] != a) return false;
  return true;
}

bool Congruence::is_full() const { return block_count() == 1; }

std::vector<std::pair<int, int>> Congruence::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (rep_[a] == rep_[b]) out.emplace_back(a, b);
  return out;
}

bool Congruence::leq(const Congruence& other) const {
  for (int a = 0; a < size(); ++a)
    if (!other.related(a, rep_[a])) return false;
  return true;
}

Congruence Congruence::diagonal(const FiniteAlgebra& A) {
  std::vector<int> rep(A.size());
  std::iota(rep.begin(), rep.end(), 0);
  return Congruence(&A, std::move(rep), std::vector<std::pair<int, int>>{});
}

Congruence Congruence::full(const FiniteAlgebra& A) {
  return Congruence(&A, std::vector<int>(A.size(), 0));
}

std::string Congruence::to_string() const {
  std::string out = "{";
  bool first_blk = true;
  for (const auto& blk : blocks()) {
    if (!first_blk) out += ",";
    first_blk = false;
    out += "{";
    for (size_t i = 0; i < blk.size(); ++i)
      out += (i ? "," : "") + std::to_string(blk[i]);
    out += "}";
  }
  return out + "}";
}

Congruence cg(const FiniteAlgebra& A,
              std::span<const std::pair<int, int>> S) {
  int n = A.size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  for (auto [a, b] : S)
    if (uf.unite(a, b)) work.emplace_back(a, b);

  const Signature& sig = A.sig();
  std::vector<int> args;
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    for (int op = 0; op < sig.op_count(); ++op) {
      int k = sig.arity(op);
      if (k == 0) continue;
      const std::vector<int>& t = A.table(op);
      if (k == 1) {
        if (uf.unite(t[u], t[v])) work.emplace_back(t[u], t[v]);
      } else if (k == 2) {
        const int* ru = t.data() + static_cast<size_t>(u) * n;
        const int* rv = t.data() + static_cast<size_t>(v) * n;
        for (int c = 0; c < n; ++c) {
          int x = ru[c], y = rv[c];
          if (x != y && uf.unite(x, y)) work.emplace_back(x, y);
          x = t[static_cast<size_t>(c) * n + u];
          y = t[static_cast<size_t>(c) * n + v];
          if (x != y && uf.unite(x, y)) work.emplace_back(x, y);
        }
      } else {
        // General one-coordinate contexts.
        long long contexts = 1;
        for (int i = 0; i < k - 1; ++i) contexts *= n;
        for (int pos = 0; pos < k; ++pos) {
          args.assign(k, 0);
          for (long long c = 0; c < contexts; ++c) {
            long long rest = c;
            for (int i = 0; i < k; ++i) {
              if (i == pos) continue;
              args[i] = static_cast<int>(rest % n);
              rest /= n;
            }
            args[pos] = u;
            int x = A.apply(op, args);
            args[pos] = v;
            int y = A.apply(op, args);
            if (uf.unite(x, y)) work.emplace_back(x, y);
          }
        }
      }
    }
  }
  return Congruence(&A, normalized_reps(uf),
                    std::vector<std::pair<int, int>>(S.begin(), S.end()));
}

Congruence cg(const FiniteAlgebra& A,
              std::initializer_list<std::pair<int, int>> S) {
  std::vector<std::pair<int, int>> v(S);
  return cg(A, std::span<const std::pair<int, int>>(v));
}

Congruence join(const Congruence& a, const Congruence& b) {
  // The transitive closure of the union of two congruences is compatible,
  // so no operation propagation is needed.
  int n = a.size();
  UnionFind uf(n);
  for (int x = 0; x < n; ++x) {
    uf.unite(x, a.rep(x));
    uf.unite(x, b.rep(x));
  }
  return Congruence(a.algebra(), normalized_reps(uf));
}

Congruence meet(const Congruence& a, const Congruence& b) {
  int n = a.size();
  std::map<std::pair<int, int>, int> first;
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) {
    auto key = std::make_pair(a.rep(x), b.rep(x));
    auto [it, inserted] = first.emplace(key, x);
    rep[x] = it->second;
  }
  return Congruence(a.algebra(), std::move(rep));
}

Congruence kernel(const Homomorphism& h) {
  int n = static_cast<int>(h.map.size());
  std::map<int, int> first;
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) {
    auto [it, inserted] = first.emplace(h.map[x], x);
    rep[x] = it->second;
  }
  return Congruence(h.source, std::move(rep));
}

QuotientResult quotient(const FiniteAlgebra& A, const Congruence& theta) {
  int n = A.size();
  std::vector<int> block_of(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a)
    if (theta.rep(a) == a) {
      block_of[a] = static_cast<int>(reps.size());
      reps.push_back(a);
    }
  for (int a = 0; a < n; ++a) block_of[a] = block_of[theta.rep(a)];
  int N = static_cast<int>(reps.size());
  std::vector<std::vector<int>> tables(A.sig().op_count());
  for (int op = 0; op < A.sig().op_count(); ++op) {
    int k = A.sig().arity(op);
    long long entries = 1;
    for (int i = 0; i < k; ++i) entries *= N;
    tables[op].resize(static_cast<size_t>(entries));
    std::vector<int> args(k);
    for (long long c = 0; c < entries; ++c) {
      long long rest = c;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = reps[rest % N];
        rest /= N;
      }
      tables[op][static_cast<size_t>(c)] = block_of[A.apply(op, args)];
    }
  }
  QuotientResult q;
  q.algebra = FiniteAlgebra(A.sig(), N, std::move(tables), A.name() + "/theta");
  q.proj = std::move(block_of);
  return q;
}

int CongruenceLattice::index_of(const Congruence& c) const {
  auto it = std::lower_bound(congs.begin(), congs.end(), c);
  if (it == congs.end() || !(*it == c))
    throw std::invalid_argument("congruence not in lattice");
  return static_cast<int>(it - congs.begin());
}

int CongruenceLattice::bottom_index() const {
  return index_of(Congruence::diagonal(*alg));
}

int CongruenceLattice::top_index() const {
  return index_of(Congruence::full(*alg));
}

CongruenceLattice con_lattice(const FiniteAlgebra& A, int limit) {
  int n = A.size();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

  // Principal sweep, parallel with a deterministic merge order.
  std::vector<std::vector<int>> principal_reps(pairs.size());
  unsigned threads = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                           8u));
  if (pairs.size() < 64) threads = 1;
  {
    std::vector<std::thread> pool;
    size_t chunk = (pairs.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      size_t lo = t * chunk, hi = std::min(pairs.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        std::pair<int, int> one[1];
        for (size_t i = lo; i < hi; ++i) {
          one[0] = pairs[i];
          principal_reps[i] =
              cg(A, std::span<const std::pair<int, int>>(one)).rep_vector();
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::set<std::vector<int>> seen;
  std::vector<Congruence> list;
  auto insert = [&](Congruence c) -> bool {
    if (!seen.insert(c.rep_vector()).second) return false;
    list.push_back(std::move(c));
    if (static_cast<int>(list.size()) > limit)
      throw BudgetError("congruence count exceeds limit " +
                        std::to_string(limit));
    return true;
  };
  insert(Congruence::diagonal(A));
  for (size_t i = 0; i < principal_reps.size(); ++i)
    insert(Congruence(&A, std::move(principal_reps[i]),
                      std::vector<std::pair<int, int>>{pairs[i]}));

  // Join-closure.
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < i; ++j) insert(join(list[i], list[j]));

  std::sort(list.begin(), list.end());

  CongruenceLattice L;
  L.alg = &A;
  L.congs = std::move(list);
  int m = static_cast<int>(L.congs.size());
  std::vector<char> leq(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[static_cast<size_t>(i) * m + j] = L.congs[i].leq(L.congs[j]) ? 1 : 0;
  L.lattice = FiniteLattice::from_leq(m, std::move(leq));
  return L;
}

std::vector<std::pair<int, int>> minimal_generators(const FiniteAlgebra& A,
                                                    const Congruence& theta) {
  std::vector<std::pair<int, int>> gens;
  for (int a = 0; a < theta.size(); ++a)
    if (theta.rep(a) != a) gens.emplace_back(theta.rep(a), a);
  std::sort(gens.begin(), gens.end());
  // Drop from the lexicographically largest pair down, so the surviving
  // generators are the lexicographically smallest ones.
  for (int i = static_cast<int>(gens.size()) - 1; i >= 0; --i) {
    std::vector<std::pair<int, int>> rest;
    rest.reserve(gens.size() - 1);
    for (int j = 0; j < static_cast<int>(gens.size()); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (cg(A, std::span<const std::pair<int, int>>(rest)) == theta)
      gens = std::move(rest);
  }
  return gens;
}

std::vector<std::vector<int>> all_subuniverses(const FiniteAlgebra& A,
                                               int limit) {
  if (A.size() > 13)
    throw BudgetError("subalgebra enumeration limited to 13 elements");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  unsigned total = 1u << A.size();
  for (unsigned s = 0; s < total; ++s) {
    std::vector<int> gens;
    for (int a = 0; a < A.size(); ++a)
      if (s >> a & 1) gens.push_back(a);
    SubalgebraResult closure = generated_subalgebra(A, gens);
    if (closure.elements.empty()) continue;  // no constants, empty generators
    if (seen.insert(closure.elements).second) {
      out.push_back(closure.elements);
      if (static_cast<int>(out.size()) > limit)
        throw BudgetError("subalgebra count exceeds limit");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CepResult cep_check(const FiniteAlgebra& A, int sub_limit) {
  for (const auto& universe : all_subuniverses(A, sub_limit)) {
    Subalgebra sub = restrict_to(A, universe);
    int m = sub.alg.size();
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        Congruence inner = cg(sub.alg, {{a, b}});
        Congruence outer = cg(A, {{universe[a], universe[b]}});
        // The extension exists iff the least congruence of A containing the
        // pair restricts back exactly.
        for (int i = 0; i < m && true; ++i)
          for (int j = 0; j < m; ++j)
            if (outer.related(universe[i], universe[j]) !=
                inner.related(i, j)) {
              CepResult r;
              r.ok = false;
              r.sub_universe = universe;
              r.pair = {universe[a], universe[b]};
              return r;
            }
      }
  }
  return {};
}

}  // namespace unifint
