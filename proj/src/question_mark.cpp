#include "tlab/question_mark.hpp"

#include <stdexcept>

namespace tlab {

namespace {

// Stern-Brocot bracket (lo, hi) with already-assigned images (vlo, vhi).
// Descends toward x, halving image mass at every mediant, until the mediant
// hits x. Terminates because every rational has a finite address in the tree.
Dyadic descend_value(ExtRational x, ExtRational lo, ExtRational hi, Dyadic vlo, Dyadic vhi) {
    for (;;) {
        ExtRational mid = mediant(lo, hi);
        Dyadic vmid = (vlo + vhi).mul_pow2(-1);
        if (mid == x) return vmid;
        if (x < mid) {
            hi = mid;
            vhi = vmid;
        } else {
            lo = mid;
            vlo = vmid;
        }
    }
}

// Inverse descent: walk the same tree choosing halves by comparing the
// target dyadic with the mediant's image.
ExtRational descend_point(const Dyadic& d, ExtRational lo, ExtRational hi, Dyadic vlo, Dyadic vhi) {
    for (;;) {
        ExtRational mid = mediant(lo, hi);
        Dyadic vmid = (vlo + vhi).mul_pow2(-1);
        if (vmid == d) return mid;
        if (d < vmid) {
            hi = mid;
            vhi = vmid;
        } else {
            lo = mid;
            vlo = vmid;
        }
    }
}

}  // namespace

Dyadic psi(const ExtRational& x) {
    if (x.is_neg_infinity()) return -Dyadic::half();
    if (x.is_pos_infinity()) return Dyadic::half();
    if (x.num() == 0) return Dyadic::zero();
    if (x.num() > 0)
        return descend_value(x, ExtRational(0, 1), ExtRational::infinity(), Dyadic::zero(), Dyadic::half());
    return descend_value(x, ExtRational::neg_infinity(), ExtRational(0, 1), -Dyadic::half(), Dyadic::zero());
}

ExtRational psi_inv(const Dyadic& d) {
    if (d < -Dyadic::half() || Dyadic::half() < d)
        throw std::domain_error("psi_inv: argument outside [-1/2, 1/2]");
    if (d == -Dyadic::half()) return ExtRational::neg_infinity();
    if (d == Dyadic::half()) return ExtRational::infinity();
    if (d.is_zero()) return ExtRational(0, 1);
    if (d > Dyadic::zero())
        return descend_point(d, ExtRational(0, 1), ExtRational::infinity(), Dyadic::zero(), Dyadic::half());
    return descend_point(d, ExtRational::neg_infinity(), ExtRational(0, 1), -Dyadic::half(), Dyadic::zero());
}

Dyadic phi_circle(const ExtRational& x) {
    if (x.is_infinite()) return Dyadic::half();
    return psi(x).mod1();
}

ExtRational phi_circle_inv(const Dyadic& d) {
    if (d < Dyadic::zero() || Dyadic::one() <= d)
        throw std::domain_error("phi_circle_inv: argument outside [0, 1)");
    if (d == Dyadic::half()) return ExtRational::infinity();
    if (d < Dyadic::half()) return psi_inv(d);
    return psi_inv(d - Dyadic::one());
}

Dyadic minkowski_q(const ExtRational& x) {
    ExtRational zero(0, 1), one(1, 1);
    if (x < zero || one < x) throw std::domain_error("minkowski_q: argument outside [0, 1]");
    if (x == zero) return Dyadic::zero();
    if (x == one) return Dyadic::one();
    return descend_value(x, zero, one, Dyadic::zero(), Dyadic::one());
}

}  // namespace tlab
