#ifndef UNIFINT_LIFTING_HPP
#define UNIFINT_LIFTING_HPP

#include <functional>
#include <optional>
#include <string>

#include "unifint/congr.hpp"

namespace unifint {

/// Congruence on the target generated by the image pairs of psi. Uses psi's
/// generating set when it carries one (both routes agree; tested).
Congruence direct_image(const Homomorphism& h, const Congruence& psi);

/// Preimage relation {(a,a') : (h(a),h(a')) in theta}; always a congruence.
Congruence inverse_image(const Homomorphism& h, const Congruence& theta);

/// The closure operator h^{-1} o h^* on congruences of the source.
Congruence closure_ch(const Homomorphism& h, const Congruence& psi);

struct RightAdjointResult {
  bool exists = false;
  std::function<Congruence(const Congruence&)> witness;
  std::optional<std::pair<Congruence, Congruence>> counterexample;
};

/// Between finite algebras every congruence is compact, so the inverse image
/// is the right adjoint of the compact lifting; the adjunction law is
/// verified exhaustively over the two enumerated lattices.
RightAdjointResult right_adjoint_of_compact_lifting(
    const Homomorphism& h, const CongruenceLattice& con_source,
    const CongruenceLattice& con_target);

struct LeftAdjointResult {
  bool exists = false;
  Congruence value;  // the adjoint value, or the failing meet candidate
};

/// Left adjoint of the compact lifting at theta: the meet of all source
/// congruences psi with theta <= f*(psi), returned when that meet still
/// satisfies the bound, reported as missing (with the candidate) otherwise.
LeftAdjointResult left_adjoint_of_compact_lifting(
    const Homomorphism& f, const Congruence& theta,
    const CongruenceLattice& con_source);

struct SurjectivePropsReport {
  bool closure_is_join_with_kernel = true;  // c_h(psi) = psi v ker h
  bool image_is_interval = true;            // image(c_h) = [ker h, full]
  bool inverse_image_bijective = true;      // h^{-1} onto the interval
  std::string witness;
  bool pass() const {
    return closure_is_join_with_kernel && image_is_interval &&
           inverse_image_bijective;
  }
};

/// Checks the closure/interval/bijection properties of a surjective
/// homomorphism, exhaustively over the congruence lattices.
SurjectivePropsReport verify_surjective_props(const Homomorphism& h,
                                              int con_limit = 20000);

}  // namespace unifint

#endif
