#pragma once

#include "tlab/dyadic.hpp"
#include "tlab/ext_rational.hpp"

namespace tlab {

// The Farey-recursive homeomorphism psi : [-inf, inf] -> [-1/2, 1/2] and its
// relatives.
//
// psi is pinned by psi(-inf) = -1/2, psi(0) = 0, psi(inf) = 1/2 and the
// mediant rule psi(p/q (+) r/s) = (psi(p/q) + psi(r/s))/2 on consecutive
// Farey numbers. It restricts to a strictly increasing bijection of
// Q u {+-inf} onto the dyadics of [-1/2, 1/2]; phi is the induced circle map
// R u {inf} -> [0, 1) and the Minkowski question-mark function is the same
// recursion run on [0, 1] with endpoint values 0 and 1.

// Exact value of psi at a rational or +-inf.
Dyadic psi(const ExtRational& x);

// Unique rational (or +-inf) preimage of a dyadic in [-1/2, 1/2].
ExtRational psi_inv(const Dyadic& d);

// phi(x) = psi(x) mod 1 in [0, 1); phi(inf) = 1/2.
Dyadic phi_circle(const ExtRational& x);

// Inverse of phi as a bijection from [0, 1) dyadics onto circle Q u {inf}.
ExtRational phi_circle_inv(const Dyadic& d);

// Minkowski ?-function at a rational of [0, 1].
Dyadic minkowski_q(const ExtRational& x);

}  // namespace tlab
