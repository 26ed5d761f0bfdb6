#pragma once

// tau-rigidity in A-mod: the presentation criterion, an explicit
// Auslander-Reiten translate (D Tr) for cross-checking, and pair predicates.

#include "taucrest/repcat.hpp"

#include <string>
#include <vector>

namespace taucrest {

/// c[l][k] is the component of f(generator k of P1) in summand l of P0, as an
/// algebra element (dim A x 1) lying in e_{v_k} A e_{w_l}.
std::vector<std::vector<Mat>> presentation_coefficients(const Presentation& p);

/// Whether Hom(P0, Y) -> Hom(P1, Y), g -> g f, is surjective.
bool presentation_hom_surjective(const Presentation& p, const Rep& y);

/// Hom(X, tau X) = 0, decided by the presentation criterion.
bool is_tau_rigid(const Rep& x);
/// Hom(Y, tau X) = 0, decided by the presentation criterion.
bool hom_to_tau_vanishes(const Rep& y, const Rep& x);

/// tau X = D Tr X built explicitly: dualize the minimal presentation into
/// A^op-mod, take the cokernel, dualize back.
Rep tau_oracle(const Rep& x);

struct TauRigidPair {
  Rep x, p;
  bool certified = false;
  std::string witness;  // first failed condition, empty when certified
};
TauRigidPair is_tau_rigid_pair(const Rep& x, const Rep& p);

struct SttPair {
  TauRigidPair pair;
  std::size_t count_x = 0, count_p = 0, count_a = 0;
  bool accepted = false;
};
SttPair is_support_tau_tilting_pair(const Rep& x, const Rep& p);

/// The basic projective P with Hom(P, X) = 0 of maximal size: the sum of
/// P(i) over the vertices where X vanishes.
Rep vanishing_projective(const Rep& x);
/// X is tau-rigid and |X| + #{i : X_i = 0} = |A|.
bool is_support_tau_tilting_module(const Rep& x);

}  // namespace taucrest
