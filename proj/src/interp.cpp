#include "unifint/interp.hpp"

#include <algorithm>
#include <random>

namespace unifint {

namespace {

std::vector<std::pair<int, int>> equations_to_pairs(const FreeAlgebra& F,
                                                    const EquationSet& es) {
  std::vector<std::pair<int, int>> out;
  out.reserve(es.equations.size());
  for (const auto& e : es.equations) out.push_back(eq_to_pair(F, e));
  return out;
}

std::vector<std::string> subtract(const std::vector<std::string>& all,
                                  const std::vector<std::string>& drop) {
  std::vector<std::string> out;
  for (const auto& v : all)
    if (std::find(drop.begin(), drop.end(), v) == drop.end())
      out.push_back(v);
  return out;
}

std::vector<std::string> unite(std::vector<std::string> a,
                               const std::vector<std::string>& b) {
  for (const auto& v : b)
    if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
  return a;
}

}  // namespace

VarietyEngine::VarietyEngine(FiniteAlgebra generator, long long budget)
    : generator_(std::move(generator)), budget_(budget) {}

const FreeAlgebra& VarietyEngine::free(const std::vector<std::string>& vars) {
  std::scoped_lock lock(mutex_);
  auto it = cache_.find(vars);
  if (it == cache_.end()) {
    auto fa = std::make_unique<FreeAlgebra>(
        free_algebra(generator_, vars, budget_));
    it = cache_.emplace(vars, std::move(fa)).first;
  }
  return *it->second;
}

const CongruenceLattice& VarietyEngine::con_free(
    const std::vector<std::string>& vars, int limit) {
  const FreeAlgebra& F = free(vars);
  std::scoped_lock lock(mutex_);
  auto it = con_cache_.find(vars);
  if (it == con_cache_.end()) {
    auto cl = std::make_unique<CongruenceLattice>(con_lattice(F.alg, limit));
    it = con_cache_.emplace(vars, std::move(cl)).first;
  }
  return *it->second;
}

std::vector<std::string> merged_vars(const EquationSet& a,
                                     const EquationSet& b) {
  return unite(a.vars, b.vars);
}

bool entails(VarietyEngine& V, const EquationSet& sigma,
             const EquationSet& delta) {
  std::vector<std::string> vars = merged_vars(sigma, delta);
  const FreeAlgebra& F = V.free(vars);
  auto sp = equations_to_pairs(F, sigma);
  Congruence theta = cg(F.alg, std::span<const std::pair<int, int>>(sp));
  for (auto [a, b] : equations_to_pairs(F, delta))
    if (!theta.related(a, b)) return false;
  return true;
}

std::vector<std::string> fresh_vars(const Signature& sig,
                                    const std::vector<std::string>& taken,
                                    int count) {
  std::vector<std::string> out;
  int k = 1;
  while (static_cast<int>(out.size()) < count) {
    std::string cand = "z" + std::to_string(k++);
    bool clash = sig.index_of(cand) >= 0 ||
                 std::find(taken.begin(), taken.end(), cand) != taken.end() ||
                 std::find(out.begin(), out.end(), cand) != out.end();
    if (!clash) out.push_back(cand);
  }
  return out;
}

EquationSet render_congruence(const FreeAlgebra& F, const Congruence& theta) {
  EquationSet es;
  es.vars = F.vars;
  for (auto [a, b] : minimal_generators(F.alg, theta))
    es.equations.push_back({F.witnesses[a], F.witnesses[b]});
  return es;
}

InterpolantResult right_uniform_interpolant(
    VarietyEngine& V, const EquationSet& sigma,
    const std::vector<std::string>& eliminate) {
  std::vector<std::string> full = unite(sigma.vars, eliminate);
  std::vector<std::string> kept = subtract(full, eliminate);
  const FreeAlgebra& Fxy = V.free(full);
  const FreeAlgebra& Fy = V.free(kept);
  Homomorphism i = inclusion_hom(Fy, Fxy);
  auto sp = equations_to_pairs(Fxy, sigma);
  Congruence theta = cg(Fxy.alg, std::span<const std::pair<int, int>>(sp));
  Congruence restricted = inverse_image(i, theta);
  InterpolantResult res;
  res.pi = render_congruence(Fy, restricted);
  res.eliminated = eliminate;
  res.kind = "right";
  return res;
}

InterpolantResult left_uniform_interpolant(
    VarietyEngine& V, const EquationSet& delta,
    const std::vector<std::string>& eliminate) {
  std::vector<std::string> full = unite(delta.vars, eliminate);
  std::vector<std::string> kept = subtract(full, eliminate);
  const FreeAlgebra& Fyz = V.free(full);
  const FreeAlgebra& Fy = V.free(kept);
  Homomorphism i = inclusion_hom(Fy, Fyz);
  auto dp = equations_to_pairs(Fyz, delta);
  Congruence theta = cg(Fyz.alg, std::span<const std::pair<int, int>>(dp));
  const CongruenceLattice& L = V.con_free(kept);
  LeftAdjointResult la = left_adjoint_of_compact_lifting(i, theta, L);
  InterpolantResult res;
  res.pi = render_congruence(Fy, la.value);
  res.eliminated = eliminate;
  res.kind = "left";
  res.ok = la.exists;
  if (!la.exists)
    res.diagnostic = "no left interpolant at Delta; meet candidate " +
                     la.value.to_string();
  return res;
}

VerifySummary verify_right_interpolant(VarietyEngine& V,
                                       const EquationSet& sigma,
                                       const InterpolantResult& result,
                                       int fresh_budget) {
  VerifySummary sum;
  std::vector<std::string> full = unite(sigma.vars, result.eliminated);
  std::vector<std::string> kept = subtract(full, result.eliminated);
  std::vector<std::string> fresh =
      fresh_vars(V.generator().sig(), unite(full, result.pi.vars), fresh_budget);
  std::vector<std::string> yz = unite(kept, fresh);
  std::vector<std::string> xyz = unite(full, fresh);
  const FreeAlgebra& Fyz = V.free(yz);
  const FreeAlgebra& Fxyz = V.free(xyz);
  Homomorphism j = inclusion_hom(Fyz, Fxyz);
  auto sp = equations_to_pairs(Fxyz, sigma);
  Congruence theta_sigma =
      cg(Fxyz.alg, std::span<const std::pair<int, int>>(sp));
  auto pp = equations_to_pairs(Fyz, result.pi);
  Congruence theta_pi = cg(Fyz.alg, std::span<const std::pair<int, int>>(pp));
  for (int a = 0; a < Fyz.alg.size(); ++a)
    for (int b = a + 1; b < Fyz.alg.size(); ++b) {
      ++sum.checked;
      bool via_sigma = theta_sigma.related(j.map[a], j.map[b]);
      bool via_pi = theta_pi.related(a, b);
      if (via_sigma != via_pi) {
        sum.pass = false;
        sum.witness = to_string(Equation{Fyz.witnesses[a], Fyz.witnesses[b]}) +
                      (via_sigma ? " follows from Sigma but not Pi"
                                 : " follows from Pi but not Sigma");
        return sum;
      }
    }
  return sum;
}

VerifySummary verify_left_interpolant(VarietyEngine& V,
                                      const EquationSet& delta,
                                      const InterpolantResult& result,
                                      int fresh_budget,
                                      unsigned long long seed) {
  VerifySummary sum;
  std::vector<std::string> full = unite(delta.vars, result.eliminated);
  std::vector<std::string> kept = subtract(full, result.eliminated);
  std::vector<std::string> fresh =
      fresh_vars(V.generator().sig(), unite(full, result.pi.vars), fresh_budget);
  std::vector<std::string> xy = unite(fresh, kept);
  std::vector<std::string> xyz = unite(xy, full);
  const FreeAlgebra& Fxy = V.free(xy);
  const FreeAlgebra& Fxyz = V.free(xyz);
  Homomorphism j = inclusion_hom(Fxy, Fxyz);
  auto dp = equations_to_pairs(Fxyz, delta);
  auto pp = equations_to_pairs(Fxy, result.pi);

  auto check_gamma = [&](std::span<const std::pair<int, int>> gamma) -> bool {
    std::vector<std::pair<int, int>> mapped;
    for (auto [a, b] : gamma) mapped.emplace_back(j.map[a], j.map[b]);
    Congruence big = cg(Fxyz.alg, std::span<const std::pair<int, int>>(mapped));
    bool entails_delta = std::all_of(
        dp.begin(), dp.end(),
        [&](const std::pair<int, int>& p) { return big.related(p.first, p.second); });
    Congruence small = cg(Fxy.alg, gamma);
    bool entails_pi = std::all_of(
        pp.begin(), pp.end(),
        [&](const std::pair<int, int>& p) { return small.related(p.first, p.second); });
    ++sum.checked;
    if (entails_delta != entails_pi) {
      sum.pass = false;
      sum.witness = "Gamma with " + std::to_string(gamma.size()) +
                    " generators distinguishes Delta from Pi";
      return false;
    }
    return true;
  };

  for (int a = 0; a < Fxy.alg.size() && sum.pass; ++a)
    for (int b = a + 1; b < Fxy.alg.size() && sum.pass; ++b) {
      std::pair<int, int> one[1] = {{a, b}};
      check_gamma(one);
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, Fxy.alg.size() - 1);
  for (int trial = 0; trial < 64 && sum.pass; ++trial) {
    std::pair<int, int> two[2] = {{pick(rng), pick(rng)},
                                  {pick(rng), pick(rng)}};
    check_gamma(two);
  }
  return sum;
}

DipSquareResult dip_square_check(VarietyEngine& V,
                                 const std::vector<std::string>& xs,
                                 const std::vector<std::string>& ys,
                                 const std::vector<std::string>& zs) {
  std::vector<std::string> xy = unite(xs, ys);
  std::vector<std::string> yz = unite(ys, zs);
  std::vector<std::string> xyz = unite(xy, zs);
  const FreeAlgebra& Fy = V.free(ys);
  const FreeAlgebra& Fxy = V.free(xy);
  const FreeAlgebra& Fyz = V.free(yz);
  const FreeAlgebra& Fxyz = V.free(xyz);
  Homomorphism i = inclusion_hom(Fy, Fxy);
  Homomorphism j = inclusion_hom(Fxy, Fxyz);
  Homomorphism k = inclusion_hom(Fyz, Fxyz);
  Homomorphism l = inclusion_hom(Fy, Fyz);
  DipSquareResult res;
  for (const Congruence& theta : V.con_free(xy).congs) {
    ++res.checked;
    Congruence lhs = inverse_image(k, direct_image(j, theta));
    Congruence rhs = direct_image(l, inverse_image(i, theta));
    if (!(lhs == rhs)) {
      res.pass = false;
      res.witness = theta.to_string();
      return res;
    }
  }
  return res;
}

InterpolantResult maehara_residual_interpolant(VarietyEngine& V,
                                               const EquationSet& sigma,
                                               const EquationSet& delta) {
  std::vector<std::string> vars = merged_vars(sigma, delta);
  const FreeAlgebra& F = V.free(vars);
  const CongruenceLattice& L = V.con_free(vars);
  auto sp = equations_to_pairs(F, sigma);
  auto dp = equations_to_pairs(F, delta);
  Congruence cs = cg(F.alg, std::span<const std::pair<int, int>>(sp));
  Congruence cd = cg(F.alg, std::span<const std::pair<int, int>>(dp));
  InterpolantResult res;
  res.kind = "maehara-residual";
  std::optional<int> r =
      residual(L.lattice, L.index_of(cd), L.index_of(cs));
  if (!r) {
    res.ok = false;
    res.diagnostic = "residual Cg(Delta) - Cg(Sigma) does not exist";
    res.pi.vars = vars;
    return res;
  }
  res.pi = render_congruence(F, L.congs[*r]);
  return res;
}

}  // namespace unifint
