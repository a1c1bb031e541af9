#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlab/question_mark.hpp"

using namespace tlab;

namespace {

ExtRational er(long long n, long long d) { return ExtRational(n, d); }

}  // namespace

TEST_CASE("psi pinned values") {
    CHECK(psi(er(0, 1)) == Dyadic::zero());
    CHECK(psi(ExtRational::infinity()) == Dyadic::half());
    CHECK(psi(ExtRational::neg_infinity()) == -Dyadic::half());
    CHECK(psi(er(1, 1)) == Dyadic(1, 2));
}

TEST_CASE("psi derived values follow the mediant recursion") {
    // Derivation oracle: 1/2 = 0/1 (+) 1/1, 1/3 = 0/1 (+) 1/2, 2 = 1/1 (+) 1/0.
    Dyadic psi_one = psi(er(1, 1));
    Dyadic psi_half = (Dyadic::zero() + psi_one).mul_pow2(-1);
    CHECK(psi(er(1, 2)) == psi_half);
    CHECK(psi(er(1, 3)) == (Dyadic::zero() + psi_half).mul_pow2(-1));
    CHECK(psi(er(1, 3)) == Dyadic(1, 4));
    CHECK(psi(er(2, 1)) == (psi_one + Dyadic::half()).mul_pow2(-1));
    CHECK(psi(er(2, 1)) == Dyadic(3, 3));
}

TEST_CASE("psi_inv inverts psi") {
    CHECK(psi_inv(Dyadic(1, 2)) == er(1, 1));
    CHECK(psi_inv(Dyadic::zero()) == er(0, 1));
    CHECK(psi_inv(Dyadic(3, 3)) == er(2, 1));
    CHECK(psi_inv(Dyadic::half()) == ExtRational::infinity());
    CHECK(psi_inv(-Dyadic::half()) == ExtRational::neg_infinity());
    CHECK_THROWS_AS(psi_inv(Dyadic(3, 2)), std::domain_error);
}

TEST_CASE("phi circle map") {
    CHECK(phi_circle(ExtRational::infinity()) == Dyadic::half());
    CHECK(phi_circle(er(0, 1)) == Dyadic::zero());
    CHECK(phi_circle(er(-1, 1)) == Dyadic(3, 2));
    CHECK(phi_circle_inv(Dyadic(3, 2)) == er(-1, 1));
    CHECK(phi_circle_inv(Dyadic::half()) == ExtRational::infinity());
    CHECK_THROWS_AS(phi_circle_inv(Dyadic::one()), std::domain_error);
}

TEST_CASE("minkowski question mark") {
    CHECK(minkowski_q(er(0, 1)) == Dyadic::zero());
    CHECK(minkowski_q(er(1, 1)) == Dyadic::one());
    CHECK(minkowski_q(er(1, 2)) == Dyadic::half());
    CHECK(minkowski_q(er(1, 3)) == Dyadic(1, 2));
    // Scaling against psi: psi(1/3) = 1/16 = (1/4) * (1/4).
    CHECK(psi(er(1, 3)) == minkowski_q(er(1, 3)).mul_pow2(-2));
    CHECK_THROWS_AS(minkowski_q(er(3, 2)), std::domain_error);
}

TEST_CASE("psi symmetries on tree nodes") {
    std::function<void(ExtRational, ExtRational, int)> walk = [&](ExtRational lo, ExtRational hi,
                                                                  int depth) {
        if (depth == 0) return;
        ExtRational m = mediant(lo, hi);
        CHECK(psi(ExtRational(-m.num(), m.den())) == -psi(m));
        CHECK(psi(ExtRational(m.den(), m.num())) == Dyadic::half() - psi(m));
        walk(lo, m, depth - 1);
        walk(m, hi, depth - 1);
    };
    walk(er(0, 1), ExtRational::infinity(), 8);
}
