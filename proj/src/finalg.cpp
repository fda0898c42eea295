#include "unifint/finalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace unifint {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (b != 0 && r > (1LL << 62) / b) throw BudgetError("power overflow");
    r *= b;
  }
  return r;
}

// Flat table index, row-major by argument.
size_t table_index(int n, std::span<const int> args) {
  size_t idx = 0;
  for (int a : args) idx = idx * static_cast<size_t>(n) + static_cast<size_t>(a);
  return idx;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(Signature sig, int size,
                             std::vector<std::vector<int>> tables,
                             std::string name)
    : sig_(std::move(sig)),
      size_(size),
      tables_(std::move(tables)),
      name_(std::move(name)) {
  if (size_ <= 0) throw std::invalid_argument("algebra size must be positive");
  if (tables_.size() != static_cast<size_t>(sig_.op_count()))
    throw std::invalid_argument("one table per operation required");
  for (int op = 0; op < sig_.op_count(); ++op) {
    size_t want = static_cast<size_t>(ipow(size_, sig_.arity(op)));
    if (tables_[op].size() != want)
      throw std::invalid_argument("table size mismatch for " + sig_.symbol(op));
    for (int v : tables_[op])
      if (v < 0 || v >= size_)
        throw std::invalid_argument("table entry out of range in " +
                                    sig_.symbol(op));
  }
}

int FiniteAlgebra::apply(int op, std::span<const int> args) const {
  return tables_[op][table_index(size_, args)];
}

std::vector<int> FiniteAlgebra::constants() const {
  std::vector<int> out;
  for (int op = 0; op < sig_.op_count(); ++op)
    if (sig_.arity(op) == 0) out.push_back(tables_[op][0]);
  return out;
}

FiniteAlgebra FiniteAlgebra::from_json(const nlohmann::ordered_json& j) {
  std::vector<OpSym> ops;
  for (const auto& o : j.at("signature"))
    ops.push_back({o.at("op").get<std::string>(), o.at("arity").get<int>()});
  Signature sig(j.value("name", std::string("algebra")), std::move(ops));
  int size = j.at("size").get<int>();
  std::vector<std::vector<int>> tables(sig.op_count());
  for (int op = 0; op < sig.op_count(); ++op) {
    const auto& t = j.at("tables").at(sig.symbol(op));
    std::vector<int>& flat = tables[op];
    // Flatten nested arrays (depth = arity) in row-major order.
    std::vector<const nlohmann::ordered_json*> stack{&t};
    auto rec = [&](auto&& self, const nlohmann::ordered_json& node,
                   int depth) -> void {
      if (depth == 0) {
        flat.push_back(node.get<int>());
        return;
      }
      for (const auto& child : node) self(self, child, depth - 1);
    };
    rec(rec, t, sig.arity(op));
  }
  return FiniteAlgebra(std::move(sig), size, std::move(tables),
                       j.value("name", std::string("algebra")));
}

nlohmann::ordered_json FiniteAlgebra::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name_.empty() ? sig_.name() : name_;
  j["signature"] = nlohmann::ordered_json::array();
  for (const auto& op : sig_.ops())
    j["signature"].push_back({{"op", op.symbol}, {"arity", op.arity}});
  j["size"] = size_;
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  for (int op = 0; op < sig_.op_count(); ++op) {
    int k = sig_.arity(op);
    // Rebuild the nested row-major shape.
    auto build = [&](auto&& self, size_t base, int depth) -> nlohmann::ordered_json {
      if (depth == 0) return tables_[op][base];
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      size_t stride = static_cast<size_t>(ipow(size_, depth - 1));
      for (int i = 0; i < size_; ++i)
        arr.push_back(self(self, base + i * stride, depth - 1));
      return arr;
    };
    tables[sig_.symbol(op)] = build(build, 0, k);
  }
  j["tables"] = tables;
  return j;
}

bool Homomorphism::surjective() const {
  std::vector<char> hit(target->size(), 0);
  for (int v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
}

bool Homomorphism::injective() const {
  std::set<int> seen(map.begin(), map.end());
  return seen.size() == map.size();
}

bool is_homomorphism(const FiniteAlgebra& A, const FiniteAlgebra& B,
                     const std::vector<int>& map) {
  if (!(A.sig() == B.sig())) return false;
  if (map.size() != static_cast<size_t>(A.size())) return false;
  int n = A.size();
  for (int op = 0; op < A.sig().op_count(); ++op) {
    int k = A.sig().arity(op);
    std::vector<int> args(k, 0), imgs(k, 0);
    long long combos = ipow(n, k);
    for (long long c = 0; c < combos; ++c) {
      long long rest = c;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (int i = 0; i < k; ++i) imgs[i] = map[args[i]];
      if (map[A.apply(op, args)] != B.apply(op, imgs)) return false;
    }
  }
  return true;
}

Homomorphism make_homomorphism(const FiniteAlgebra& A, const FiniteAlgebra& B,
                               std::vector<int> map) {
  if (!is_homomorphism(A, B, map))
    throw std::invalid_argument("map is not a homomorphism");
  return Homomorphism{&A, &B, std::move(map)};
}

Homomorphism identity_hom(const FiniteAlgebra& A) {
  std::vector<int> m(A.size());
  std::iota(m.begin(), m.end(), 0);
  return Homomorphism{&A, &A, std::move(m)};
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  if (f.target != g.source)
    throw std::invalid_argument("compose: mismatched homomorphisms");
  std::vector<int> m(f.map.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return Homomorphism{f.source, g.target, std::move(m)};
}

FiniteAlgebra direct_power(const FiniteAlgebra& A, int exponent,
                           long long budget) {
  if (exponent <= 0) throw std::invalid_argument("exponent must be positive");
  long long n = ipow(A.size(), exponent);
  if (n > budget)
    throw BudgetError("direct power size " + std::to_string(n) +
                      " exceeds budget " + std::to_string(budget));
  int N = static_cast<int>(n);
  auto digit = [&](int rank, int j) {
    for (int i = 0; i < j; ++i) rank /= A.size();
    return rank % A.size();
  };
  std::vector<std::vector<int>> tables(A.sig().op_count());
  for (int op = 0; op < A.sig().op_count(); ++op) {
    int k = A.sig().arity(op);
    long long entries = ipow(N, k);
    if (entries > kTableEntryBudget)
      throw BudgetError("direct power table for " + A.sig().symbol(op) +
                        " exceeds table budget");
    tables[op].resize(static_cast<size_t>(entries));
    std::vector<int> args(k, 0), comps(k, 0);
    for (long long c = 0; c < entries; ++c) {
      long long rest = c;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % N);
        rest /= N;
      }
      int result = 0;
      for (int j = exponent - 1; j >= 0; --j) {
        for (int i = 0; i < k; ++i) comps[i] = digit(args[i], j);
        result = result * A.size() + A.apply(op, comps);
      }
      tables[op][static_cast<size_t>(c)] = result;
    }
  }
  return FiniteAlgebra(A.sig(), N, std::move(tables),
                       A.name() + "^" + std::to_string(exponent));
}

FiniteAlgebra direct_product(const FiniteAlgebra& A, const FiniteAlgebra& B,
                             long long budget) {
  if (!(A.sig() == B.sig()))
    throw std::invalid_argument("product requires a common signature");
  long long n = static_cast<long long>(A.size()) * B.size();
  if (n > budget) throw BudgetError("direct product exceeds budget");
  int N = static_cast<int>(n);
  std::vector<std::vector<int>> tables(A.sig().op_count());
  for (int op = 0; op < A.sig().op_count(); ++op) {
    int k = A.sig().arity(op);
    long long entries = ipow(N, k);
    if (entries > kTableEntryBudget) throw BudgetError("product table too large");
    tables[op].resize(static_cast<size_t>(entries));
    std::vector<int> args(k), as(k), bs(k);
    for (long long c = 0; c < entries; ++c) {
      long long rest = c;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % N);
        rest /= N;
      }
      for (int i = 0; i < k; ++i) {
        as[i] = args[i] / B.size();
        bs[i] = args[i] % B.size();
      }
      tables[op][static_cast<size_t>(c)] =
          A.apply(op, as) * B.size() + B.apply(op, bs);
    }
  }
  return FiniteAlgebra(A.sig(), N, std::move(tables),
                       A.name() + "x" + B.name());
}

// Closure sweeps: symbols sorted lexicographically, argument tuples in
// lexicographic order of element discovery index. New elements found in a
// sweep are not used as arguments until the next sweep, so witnesses come
// out breadth-first with the documented tie-breaking.
SubalgebraResult generated_subalgebra(const FiniteAlgebra& A,
                                      const std::vector<int>& gens,
                                      const std::vector<Term>& labels,
                                      long long budget) {
  SubalgebraResult res;
  std::vector<char> in(A.size(), 0);
  std::vector<int> order;  // discovery order
  std::map<int, Term> wit;
  auto add = [&](int e, Term w) {
    if (in[e]) return false;
    in[e] = 1;
    order.push_back(e);
    wit.emplace(e, std::move(w));
    if (static_cast<long long>(order.size()) > budget)
      throw BudgetError("subuniverse budget exceeded");
    return true;
  };
  for (size_t i = 0; i < gens.size(); ++i) {
    Term label = i < labels.size() ? labels[i]
                                   : Term::variable("g" + std::to_string(i));
    add(gens[i], std::move(label));
  }
  std::vector<int> op_order(A.sig().op_count());
  std::iota(op_order.begin(), op_order.end(), 0);
  std::sort(op_order.begin(), op_order.end(), [&](int a, int b) {
    return A.sig().symbol(a) < A.sig().symbol(b);
  });
  bool grew = true;
  while (grew) {
    grew = false;
    size_t frontier = order.size();
    for (int op : op_order) {
      int k = A.sig().arity(op);
      std::vector<size_t> idx(k, 0);
      std::vector<int> args(k);
      while (true) {
        bool ok = true;
        for (int i = 0; i < k; ++i) {
          if (idx[i] >= frontier) { ok = false; break; }
          args[i] = order[idx[i]];
        }
        if (ok) {
          int r = A.apply(op, args);
          if (!in[r]) {
            std::vector<Term> children;
            for (int i = 0; i < k; ++i) children.push_back(wit.at(args[i]));
            add(r, Term::app(A.sig().symbol(op), std::move(children)));
            grew = true;
          }
        }
        if (k == 0) break;
        int pos = k - 1;
        while (pos >= 0 && ++idx[pos] >= frontier) idx[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
  res.elements = order;
  std::sort(res.elements.begin(), res.elements.end());
  res.witnesses = std::move(wit);
  return res;
}

Subalgebra restrict_to(const FiniteAlgebra& A,
                       const std::vector<int>& subuniverse) {
  std::vector<int> elems = subuniverse;
  std::sort(elems.begin(), elems.end());
  std::vector<int> pos(A.size(), -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  int N = static_cast<int>(elems.size());
  std::vector<std::vector<int>> tables(A.sig().op_count());
  for (int op = 0; op < A.sig().op_count(); ++op) {
    int k = A.sig().arity(op);
    long long entries = ipow(N, k);
    tables[op].resize(static_cast<size_t>(entries));
    std::vector<int> args(k);
    for (long long c = 0; c < entries; ++c) {
      long long rest = c;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = elems[rest % N];
        rest /= N;
      }
      int r = A.apply(op, args);
      if (pos[r] < 0)
        throw std::invalid_argument("subset is not a subuniverse");
      tables[op][static_cast<size_t>(c)] = pos[r];
    }
  }
  Subalgebra sub;
  sub.alg = FiniteAlgebra(A.sig(), N, std::move(tables), A.name() + "|sub");
  sub.elements = elems;
  sub.embedding = Homomorphism{&sub.alg, &A, elems};
  return sub;
}

int FreeAlgebra::var_element(const std::string& v) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == v) return static_cast<int>(i);
  throw std::invalid_argument("not a free generator: " + v);
}

int FreeAlgebra::assignment_count() const {
  return static_cast<int>(tuples.empty() ? 0 : tuples[0].size());
}

int FreeAlgebra::assignment_digit(int assignment, int var_pos) const {
  int g = generator->size();
  for (int i = 0; i < var_pos; ++i) assignment /= g;
  return assignment % g;
}

FreeAlgebra free_algebra(const FiniteAlgebra& G,
                         std::vector<std::string> vars, long long budget) {
  for (const auto& v : vars)
    if (G.sig().index_of(v) >= 0)
      throw std::invalid_argument("variable clashes with operation symbol: " + v);
  if (vars.empty()) G.sig().require_constant("free algebra on no generators");
  int g = G.size();
  int k = static_cast<int>(vars.size());
  long long m = ipow(g, k);
  if (m > budget) throw BudgetError("assignment space exceeds budget");
  int M = static_cast<int>(m);

  FreeAlgebra F;
  F.generator = &G;
  F.vars = vars;

  // The element count must stay small enough that the tables materialized at
  // the end (size^arity entries) fit the table budget; enforcing it here
  // keeps the quadratic closure from running long past any useful size.
  int max_ar = 0;
  for (const auto& op : G.sig().ops()) max_ar = std::max(max_ar, op.arity);
  long long element_cap = budget;
  if (max_ar >= 2) {
    long long cap = 1;
    while (ipow(cap + 1, max_ar) <= kTableEntryBudget) ++cap;
    element_cap = std::min(element_cap, cap);
  }

  auto add = [&](std::vector<int> tuple, Term w) -> int {
    auto it = F.index.find(tuple);
    if (it != F.index.end()) return -1;
    int id = static_cast<int>(F.tuples.size());
    F.index.emplace(tuple, id);
    F.tuples.push_back(std::move(tuple));
    F.witnesses.push_back(std::move(w));
    if (static_cast<long long>(F.tuples.size()) > element_cap)
      throw BudgetError("free algebra element budget exceeded");
    return id;
  };

  for (int j = 0; j < k; ++j) {
    std::vector<int> t(M);
    for (int a = 0; a < M; ++a) {
      int rest = a;
      for (int i = 0; i < j; ++i) rest /= g;
      t[a] = rest % g;
    }
    add(std::move(t), Term::variable(vars[j]));
  }

  std::vector<int> op_order(G.sig().op_count());
  std::iota(op_order.begin(), op_order.end(), 0);
  std::sort(op_order.begin(), op_order.end(), [&](int a, int b) {
    return G.sig().symbol(a) < G.sig().symbol(b);
  });

  bool grew = true;
  bool first_sweep = true;
  while (grew || first_sweep) {
    grew = false;
    size_t frontier = F.tuples.size();
    for (int op : op_order) {
      int kk = G.sig().arity(op);
      if (kk == 0 && !first_sweep) continue;
      std::vector<size_t> idx(kk, 0);
      std::vector<int> comps(kk);
      while (true) {
        bool in_range = true;
        for (int i = 0; i < kk; ++i)
          if (idx[i] >= frontier) { in_range = false; break; }
        if (in_range) {
          std::vector<int> t(M);
          for (int a = 0; a < M; ++a) {
            for (int i = 0; i < kk; ++i) comps[i] = F.tuples[idx[i]][a];
            t[a] = G.apply(op, comps);
          }
          if (!F.index.count(t)) {
            std::vector<Term> children;
            for (int i = 0; i < kk; ++i)
              children.push_back(F.witnesses[idx[i]]);
            add(std::move(t), Term::app(G.sig().symbol(op), std::move(children)));
            grew = true;
          }
        }
        if (kk == 0) break;
        int pos = kk - 1;
        while (pos >= 0 && ++idx[pos] >= frontier) idx[pos--] = 0;
        if (pos < 0) break;
      }
    }
    first_sweep = false;
  }

  int N = static_cast<int>(F.tuples.size());
  std::vector<std::vector<int>> tables(G.sig().op_count());
  for (int op = 0; op < G.sig().op_count(); ++op) {
    int kk = G.sig().arity(op);
    long long entries = ipow(N, kk);
    if (entries > kTableEntryBudget)
      throw BudgetError("free algebra table for " + G.sig().symbol(op) +
                        " exceeds table budget");
    tables[op].resize(static_cast<size_t>(entries));
    std::vector<int> args(kk), comps(kk);
    for (long long c = 0; c < entries; ++c) {
      long long rest = c;
      for (int i = kk - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % N);
        rest /= N;
      }
      std::vector<int> t(M);
      for (int a = 0; a < M; ++a) {
        for (int i = 0; i < kk; ++i) comps[i] = F.tuples[args[i]][a];
        t[a] = G.apply(op, comps);
      }
      tables[op][static_cast<size_t>(c)] = F.index.at(t);
    }
  }
  std::string nm = "F_" + G.name() + "(";
  for (size_t i = 0; i < vars.size(); ++i) nm += (i ? "," : "") + vars[i];
  nm += ")";
  F.alg = FiniteAlgebra(G.sig(), N, std::move(tables), nm);
  return F;
}

Homomorphism inclusion_hom(const FreeAlgebra& sub, const FreeAlgebra& sup) {
  if (sub.generator != sup.generator)
    throw std::invalid_argument("inclusion requires a common generator algebra");
  int g = sub.generator->size();
  std::vector<int> pos;  // position of each sub var within sup.vars
  for (const auto& v : sub.vars) {
    auto it = std::find(sup.vars.begin(), sup.vars.end(), v);
    if (it == sup.vars.end())
      throw std::invalid_argument("variables are not a subset: " + v);
    pos.push_back(static_cast<int>(it - sup.vars.begin()));
  }
  int Msup = sup.assignment_count();
  int ksub = static_cast<int>(sub.vars.size());
  std::vector<int> restrict_idx(Msup, 0);
  for (int a = 0; a < Msup; ++a) {
    int subidx = 0;
    long long mult = 1;
    for (int j = 0; j < ksub; ++j) {
      subidx += sup.assignment_digit(a, pos[j]) * static_cast<int>(mult);
      mult *= g;
    }
    restrict_idx[a] = subidx;
  }
  std::vector<int> map(sub.tuples.size());
  for (size_t e = 0; e < sub.tuples.size(); ++e) {
    std::vector<int> t(Msup);
    for (int a = 0; a < Msup; ++a) t[a] = sub.tuples[e][restrict_idx[a]];
    map[e] = sup.index.at(t);
  }
  return Homomorphism{&sub.alg, &sup.alg, std::move(map)};
}

int evaluate(const Term& t, const FiniteAlgebra& A,
             const std::map<std::string, int>& assignment) {
  if (t.var) {
    auto it = assignment.find(t.head);
    if (it == assignment.end())
      throw std::runtime_error("unassigned variable: " + t.head);
    return it->second;
  }
  int op = A.sig().index_of(t.head);
  if (op < 0) throw std::runtime_error("unknown symbol: " + t.head);
  std::vector<int> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(evaluate(a, A, assignment));
  return A.apply(op, args);
}

std::pair<int, int> eq_to_pair(const FreeAlgebra& F, const Equation& e) {
  std::map<std::string, int> assign;
  for (size_t i = 0; i < F.vars.size(); ++i)
    assign[F.vars[i]] = static_cast<int>(i);
  return {evaluate(e.lhs, F.alg, assign), evaluate(e.rhs, F.alg, assign)};
}

HomSearchResult all_homomorphisms(const FiniteAlgebra& A,
                                  const FiniteAlgebra& B, size_t limit) {
  // Greedy generating set: close constants, then repeatedly adjoin the
  // smallest missing element.
  std::vector<int> gens;
  std::vector<Term> labels;
  SubalgebraResult closure = generated_subalgebra(A, gens, labels);
  while (closure.elements.size() < static_cast<size_t>(A.size())) {
    int missing = 0;
    std::vector<char> in(A.size(), 0);
    for (int e : closure.elements) in[e] = 1;
    while (in[missing]) ++missing;
    gens.push_back(missing);
    labels.push_back(Term::variable("g" + std::to_string(gens.size() - 1)));
    closure = generated_subalgebra(A, gens, labels);
  }

  HomSearchResult result;
  size_t k = gens.size();
  std::vector<int> images(k, 0);
  while (true) {
    std::map<std::string, int> assign;
    for (size_t i = 0; i < k; ++i)
      assign["g" + std::to_string(i)] = images[i];
    std::vector<int> map(A.size(), -1);
    bool ok = true;
    try {
      for (int e = 0; e < A.size(); ++e)
        map[e] = evaluate(closure.witnesses.at(e), B, assign);
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok && is_homomorphism(A, B, map)) {
      if (result.homs.size() >= limit) {
        result.truncated = true;
        return result;
      }
      result.homs.push_back(Homomorphism{&A, &B, std::move(map)});
    }
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && ++images[pos] >= B.size()) images[pos--] = 0;
    if (pos < 0) break;
  }
  return result;
}

}  // namespace unifint
