#include "unifint/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace unifint {

Congruence direct_image(const Homomorphism& h, const Congruence& psi) {
  std::vector<std::pair<int, int>> seed;
  if (psi.generators()) {
    for (auto [a, b] : *psi.generators())
      seed.emplace_back(h.map[a], h.map[b]);
  } else {
    for (auto [a, b] : psi.pairs()) seed.emplace_back(h.map[a], h.map[b]);
  }
  return cg(*h.target, std::span<const std::pair<int, int>>(seed));
}

Congruence inverse_image(const Homomorphism& h, const Congruence& theta) {
  int n = static_cast<int>(h.map.size());
  std::map<int, int> first;  // theta-class rep of image -> least preimage
  std::vector<int> rep(n);
  for (int a = 0; a < n; ++a) {
    auto [it, inserted] = first.emplace(theta.rep(h.map[a]), a);
    rep[a] = it->second;
  }
  return Congruence(h.source, std::move(rep));
}

Congruence closure_ch(const Homomorphism& h, const Congruence& psi) {
  return inverse_image(h, direct_image(h, psi));
}

RightAdjointResult right_adjoint_of_compact_lifting(
    const Homomorphism& h, const CongruenceLattice& con_source,
    const CongruenceLattice& con_target) {
  RightAdjointResult res;
  for (const Congruence& psi : con_source.congs)
    for (const Congruence& theta : con_target.congs) {
      bool lhs = direct_image(h, psi).leq(theta);
      bool rhs = psi.leq(inverse_image(h, theta));
      if (lhs != rhs) {
        res.exists = false;
        res.counterexample = {psi, theta};
        return res;
      }
    }
  res.exists = true;
  const Homomorphism* hp = &h;
  res.witness = [hp](const Congruence& theta) {
    return inverse_image(*hp, theta);
  };
  return res;
}

LeftAdjointResult left_adjoint_of_compact_lifting(
    const Homomorphism& f, const Congruence& theta,
    const CongruenceLattice& con_source) {
  // Meet over the empty set is the full congruence.
  Congruence candidate = Congruence::full(*f.source);
  for (const Congruence& psi : con_source.congs)
    if (theta.leq(direct_image(f, psi))) candidate = meet(candidate, psi);
  LeftAdjointResult res;
  res.value = candidate;
  res.exists = theta.leq(direct_image(f, candidate));
  return res;
}

SurjectivePropsReport verify_surjective_props(const Homomorphism& h,
                                              int con_limit) {
  if (!h.surjective())
    throw std::invalid_argument("verify_surjective_props: h is not surjective");
  SurjectivePropsReport rep;
  Congruence ker = kernel(h);
  CongruenceLattice con_a = con_lattice(*h.source, con_limit);
  CongruenceLattice con_b = con_lattice(*h.target, con_limit);

  std::set<std::vector<int>> image_of_ch;
  for (const Congruence& psi : con_a.congs) {
    Congruence c = closure_ch(h, psi);
    image_of_ch.insert(c.rep_vector());
    if (!(c == join(psi, ker))) {
      rep.closure_is_join_with_kernel = false;
      rep.witness = "c_h(" + psi.to_string() + ") != psi v ker";
      return rep;
    }
  }
  std::set<std::vector<int>> interval;
  for (const Congruence& psi : con_a.congs)
    if (ker.leq(psi)) interval.insert(psi.rep_vector());
  if (image_of_ch != interval) {
    rep.image_is_interval = false;
    rep.witness = "image(c_h) != [ker h, full]";
    return rep;
  }
  std::set<std::vector<int>> preimages;
  for (const Congruence& theta : con_b.congs) {
    Congruence q = inverse_image(h, theta);
    if (!ker.leq(q)) {
      rep.inverse_image_bijective = false;
      rep.witness = "h^{-1}(" + theta.to_string() + ") does not contain ker h";
      return rep;
    }
    preimages.insert(q.rep_vector());
  }
  if (preimages.size() != con_b.congs.size() || preimages != interval) {
    rep.inverse_image_bijective = false;
    rep.witness = "h^{-1} is not a bijection onto the interval";
  }
  return rep;
}

}  // namespace unifint
