#include "unifint/mc.hpp"

#include <algorithm>
#include <stdexcept>

namespace unifint {

namespace {

std::vector<std::string> unite(std::vector<std::string> a,
                               const std::vector<std::string>& b) {
  for (const auto& v : b)
    if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
  return a;
}

std::vector<std::pair<int, int>> equations_to_pairs(const FreeAlgebra& F,
                                                    const EquationSet& es) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : es.equations) out.push_back(eq_to_pair(F, e));
  return out;
}

bool sat_eqset(const FiniteAlgebra& A, const std::map<std::string, int>& asg,
               const EquationSet& es) {
  for (const auto& e : es.equations)
    if (evaluate(e.lhs, A, asg) != evaluate(e.rhs, A, asg)) return false;
  return true;
}

/// phi_(Base, Neg_1..Neg_n) := phi_Base and the negation of each phi_Neg_m.
bool sat_phi(const FiniteAlgebra& A, const std::map<std::string, int>& asg,
             const EquationSet& base, const std::vector<EquationSet>& negs) {
  if (!sat_eqset(A, asg, base)) return false;
  for (const auto& n : negs)
    if (sat_eqset(A, asg, n)) return false;
  return true;
}

FOFormula fo_true() { return FOFormula{}; }

FOFormula fo_eq(const Equation& e) {
  FOFormula f;
  f.kind = FOFormula::Kind::Eq;
  f.eq = e;
  return f;
}

FOFormula fo_and(std::vector<FOFormula> children) {
  FOFormula f;
  f.kind = FOFormula::Kind::And;
  f.children = std::move(children);
  return f;
}

FOFormula fo_not(FOFormula child) {
  FOFormula f;
  f.kind = FOFormula::Kind::Not;
  f.children.push_back(std::move(child));
  return f;
}

FOFormula conjunction_of(const EquationSet& base,
                         const std::vector<EquationSet>& negs) {
  std::vector<FOFormula> children;
  for (const auto& e : base.equations) children.push_back(fo_eq(e));
  for (const auto& n : negs) {
    std::vector<FOFormula> inner;
    for (const auto& e : n.equations) inner.push_back(fo_eq(e));
    children.push_back(fo_not(fo_and(std::move(inner))));
  }
  if (children.empty()) return fo_true();
  return fo_and(std::move(children));
}

std::string assignment_text(const std::vector<std::string>& vars,
                            const std::map<std::string, int>& asg) {
  std::string out;
  for (const auto& v : vars) {
    if (!out.empty()) out += ", ";
    out += v + "=" + std::to_string(asg.at(v));
  }
  return out;
}

}  // namespace

std::string to_string(const FOFormula& f) {
  switch (f.kind) {
    case FOFormula::Kind::True:
      return "true";
    case FOFormula::Kind::Eq:
      return "(" + to_string(*f.eq) + ")";
    case FOFormula::Kind::Not:
      return "~ " + to_string(f.children[0]);
    case FOFormula::Kind::And: {
      if (f.children.empty()) return "true";
      if (f.children.size() == 1 &&
          f.children[0].kind == FOFormula::Kind::Eq)
        return to_string(f.children[0]);
      std::string out;
      for (const auto& c : f.children) {
        if (!out.empty()) out += " & ";
        out += to_string(c);
      }
      return "(" + out + ")";
    }
    case FOFormula::Kind::Implies:
      return to_string(f.children[0]) + " -> " + to_string(f.children[1]);
    case FOFormula::Kind::Exists:
      return "exists " + f.var + " . " + to_string(f.children[0]);
  }
  return "";
}

AxiomDatum build_axiom_datum(VarietyEngine& V, const EquationSet& gamma,
                             const std::vector<EquationSet>& deltas,
                             const std::string& x) {
  AxiomDatum d;
  d.gamma = gamma;
  d.deltas = deltas;
  d.x = x;
  d.xbar = gamma.vars;
  for (const auto& dm : deltas) d.xbar = unite(d.xbar, dm.vars);
  d.xbar = unite(d.xbar, {x});
  d.zbar = d.xbar;
  std::erase(d.zbar, x);

  const FreeAlgebra& Fx = V.free(d.xbar);
  const FreeAlgebra& Fz = V.free(d.zbar);
  Homomorphism i = inclusion_hom(Fz, Fx);

  auto gp = equations_to_pairs(Fx, gamma);
  Congruence theta_gamma =
      cg(Fx.alg, std::span<const std::pair<int, int>>(gp));
  Congruence restricted = inverse_image(i, theta_gamma);
  d.sigma = render_congruence(Fz, restricted);
  d.sigma.vars = d.zbar;

  const CongruenceLattice& con_x = V.con_free(d.xbar);
  const CongruenceLattice& con_z = V.con_free(d.zbar);
  for (size_t m = 0; m < deltas.size(); ++m) {
    auto dp = equations_to_pairs(Fx, deltas[m]);
    Congruence theta_delta =
        cg(Fx.alg, std::span<const std::pair<int, int>>(dp));
    std::optional<int> r = residual(con_x.lattice, con_x.index_of(theta_delta),
                                    con_x.index_of(theta_gamma));
    if (!r)
      throw std::runtime_error("residual theta_Delta_" + std::to_string(m + 1) +
                               " - theta_Gamma does not exist");
    LeftAdjointResult la =
        left_adjoint_of_compact_lifting(i, con_x.congs[*r], con_z);
    if (!la.exists)
      throw std::runtime_error("left adjoint missing at the residual for Delta_" +
                               std::to_string(m + 1));
    EquationSet pi = render_congruence(Fz, la.value);
    pi.vars = d.zbar;
    d.pis.push_back(std::move(pi));
  }

  // Construction invariants: the rendered sets generate what they should.
  auto sp = equations_to_pairs(Fz, d.sigma);
  if (!(cg(Fz.alg, std::span<const std::pair<int, int>>(sp)) == restricted))
    throw std::runtime_error("Sigma does not generate the restricted congruence");
  return d;
}

FOFormula emit_axiom(const AxiomDatum& d) {
  FOFormula body = conjunction_of(d.gamma, d.deltas);
  FOFormula ex;
  ex.kind = FOFormula::Kind::Exists;
  ex.var = d.x;
  ex.children.push_back(std::move(body));
  FOFormula imp;
  imp.kind = FOFormula::Kind::Implies;
  imp.children.push_back(conjunction_of(d.sigma, d.pis));
  imp.children.push_back(std::move(ex));
  return imp;
}

bool in_variety(VarietyEngine& V, const FiniteAlgebra& M, int k) {
  if (!(M.sig() == V.generator().sig())) return false;
  std::vector<std::string> vars;
  for (int i = 0; i < k; ++i) vars.push_back("v" + std::to_string(i + 1));
  const FreeAlgebra& F = V.free(vars);
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= M.size();
  for (long long a = 0; a < total; ++a) {
    std::map<std::string, int> asg;
    long long rest = a;
    for (int i = 0; i < k; ++i) {
      asg[vars[i]] = static_cast<int>(rest % M.size());
      rest /= M.size();
    }
    std::vector<int> e(F.alg.size());
    for (int f = 0; f < F.alg.size(); ++f)
      e[f] = evaluate(F.witnesses[f], M, asg);
    if (!is_homomorphism(F.alg, M, e)) return false;
  }
  return true;
}

QuantElimReport verify_quantelim_direction(
    VarietyEngine& V, const AxiomDatum& d,
    const std::vector<const FiniteAlgebra*>& models) {
  QuantElimReport rep;
  int k = static_cast<int>(d.xbar.size());
  for (const FiniteAlgebra* Mp : models) {
    const FiniteAlgebra& M = *Mp;
    if (!in_variety(V, M, k)) {
      rep.pass = false;
      rep.witness = "model '" + M.name() + "' fails the variety identity check";
      return rep;
    }
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= M.size();
    for (long long a = 0; a < total; ++a) {
      std::map<std::string, int> asg;
      long long rest = a;
      for (int i = 0; i < k; ++i) {
        asg[d.xbar[i]] = static_cast<int>(rest % M.size());
        rest /= M.size();
      }
      ++rep.assignments;
      if (sat_phi(M, asg, d.gamma, d.deltas) &&
          !sat_phi(M, asg, d.sigma, d.pis)) {
        rep.pass = false;
        rep.witness = "model '" + M.name() + "', assignment " +
                      assignment_text(d.xbar, asg);
        return rep;
      }
    }
  }
  return rep;
}

CotheoryReport verify_cotheory_instance(VarietyEngine& V, const AxiomDatum& d,
                                        const FiniteAlgebra& Aprime,
                                        const std::map<std::string, int>& fprime) {
  CotheoryReport rep;
  for (const auto& v : d.zbar) {
    auto it = fprime.find(v);
    if (it == fprime.end() || it->second < 0 || it->second >= Aprime.size()) {
      rep.detail = "f' is not a total assignment of " + v + " into A'";
      return rep;
    }
  }
  if (!in_variety(V, Aprime, static_cast<int>(d.zbar.size()))) {
    rep.detail = "A' fails the variety identity check";
    return rep;
  }
  if (!sat_phi(Aprime, fprime, d.sigma, d.pis)) {
    rep.detail = "f' does not satisfy phi_(Sigma,Pi-bar) in A'";
    return rep;
  }
  rep.precondition_ok = true;

  const FreeAlgebra& Fx = V.free(d.xbar);
  const FreeAlgebra& Fz = V.free(d.zbar);
  std::vector<int> fhat(Fz.alg.size());
  for (int f = 0; f < Fz.alg.size(); ++f)
    fhat[f] = evaluate(Fz.witnesses[f], Aprime, fprime);
  if (!is_homomorphism(Fz.alg, Aprime, fhat)) {
    rep.detail = "evaluation at f' is not a homomorphism";
    return rep;
  }
  Homomorphism fh = make_homomorphism(Fz.alg, Aprime, fhat);
  if (!fh.surjective()) {
    rep.surjective_case = false;
    rep.detail =
        "the induced map onto A' is not surjective; the general case uses "
        "amalgamation and is not constructed here";
    return rep;
  }

  Homomorphism i = inclusion_hom(Fz, Fx);
  auto gp = equations_to_pairs(Fx, d.gamma);
  Congruence theta = join(cg(Fx.alg, std::span<const std::pair<int, int>>(gp)),
                          direct_image(i, kernel(fh)));
  QuotientResult q = quotient(Fx.alg, theta);
  rep.quotient_size = q.algebra.size();

  rep.injective = inverse_image(i, theta) == kernel(fh);
  if (!rep.injective) {
    rep.detail = "i^{-1}(theta) differs from ker f-hat'; iota would not embed";
    return rep;
  }

  rep.embedding.assign(Aprime.size(), -1);
  for (int w = 0; w < Fz.alg.size(); ++w)
    if (rep.embedding[fhat[w]] == -1)
      rep.embedding[fhat[w]] = q.proj[i.map[w]];
  if (!is_homomorphism(Aprime, q.algebra, rep.embedding)) {
    rep.detail = "iota is not a homomorphism";
    return rep;
  }
  for (int a = 0; a < Aprime.size(); ++a)
    for (int b = a + 1; b < Aprime.size(); ++b)
      if (rep.embedding[a] == rep.embedding[b]) {
        rep.injective = false;
        rep.detail = "iota identifies " + std::to_string(a) + " and " +
                     std::to_string(b);
        return rep;
      }

  std::map<std::string, int> g;
  for (const auto& v : d.xbar) g[v] = q.proj[Fx.var_element(v)];
  rep.witness_x = g[d.x];
  for (const auto& v : d.zbar)
    if (g[v] != rep.embedding[fprime.at(v)]) {
      rep.detail = "iota o f' disagrees with the extended assignment at " + v;
      return rep;
    }
  if (!sat_phi(q.algebra, g, d.gamma, d.deltas)) {
    rep.detail = "the extended assignment fails phi_(Gamma,Delta-bar)";
    return rep;
  }
  rep.pass = true;
  rep.detail = "embedded A' into F(xbar)/theta with witness x = " +
               std::to_string(rep.witness_x);
  return rep;
}

}  // namespace unifint
