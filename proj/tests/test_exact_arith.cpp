#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlab/dyadic.hpp"
#include "tlab/ext_rational.hpp"
#include "tlab/numeric.hpp"

using namespace tlab;

namespace {

ExtRational er(long long n, long long d) { return ExtRational(n, d); }

// All Stern-Brocot nodes between lo and hi down to the given depth, with
// their brackets, emitted in order.
void walk(const ExtRational& lo, const ExtRational& hi, int depth,
          const std::function<void(const ExtRational&, const ExtRational&, const ExtRational&)>& f) {
    if (depth == 0) return;
    ExtRational m = mediant(lo, hi);
    f(lo, m, hi);
    walk(lo, m, depth - 1, f);
    walk(m, hi, depth - 1, f);
}

}  // namespace

TEST_CASE("dyadic canonical form and arithmetic") {
    CHECK(Dyadic(6, 3) == Dyadic(3, 2));
    CHECK(Dyadic(6, 3).numerator() == 3);
    CHECK(Dyadic(6, 3).exponent() == 2);
    CHECK(Dyadic(0, 7) == Dyadic::zero());
    CHECK(Dyadic(4, 0).numerator() == 4);  // integers keep exponent 0

    CHECK(Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2));
    CHECK(Dyadic(1, 1) - Dyadic(3, 2) == Dyadic(-1, 2));
    CHECK(Dyadic(3, 2) * Dyadic(1, 1) == Dyadic(3, 3));
    CHECK(Dyadic(3, 2).mul_pow2(2) == Dyadic(3, 0));
    CHECK(Dyadic(3, 2).mul_pow2(-1) == Dyadic(3, 3));
    CHECK(Dyadic(-1, 2).mod1() == Dyadic(3, 2));
    CHECK(Dyadic(9, 2).mod1() == Dyadic(1, 2));
}

TEST_CASE("dyadic canonicalization is idempotent and order-preserving") {
    SplitMix64 rng(7);
    for (int i = 0; i < 300; ++i) {
        BigInt n1 = static_cast<long long>(rng.next() % 2048) - 1024;
        BigInt n2 = static_cast<long long>(rng.next() % 2048) - 1024;
        int e1 = static_cast<int>(rng.next_below(10)), e2 = static_cast<int>(rng.next_below(10));
        Dyadic a(n1, e1), b(n2, e2);
        CHECK(Dyadic(a.numerator(), a.exponent()) == a);
        // Order agrees with the rational values.
        bool lt_exact = a.to_rational() < b.to_rational();
        CHECK(lt_exact == (a < b));
    }
}

TEST_CASE("dyadic text form round trips bit-exactly") {
    for (auto* txt : {"3/2^2", "0/2^0", "-7/2^3", "5/2^0", "-1/2^1"}) {
        auto d = Dyadic::parse(txt);
        REQUIRE(d.has_value());
        CHECK(d->str() == txt);
    }
    CHECK(Dyadic::parse("4/2^2").value() == Dyadic(1, 0));  // parse canonicalizes
    CHECK_FALSE(Dyadic::parse("1/3").has_value());
    CHECK_FALSE(Dyadic::parse("x").has_value());
}

TEST_CASE("ext rational reduction and infinities") {
    CHECK(er(2, 4) == er(1, 2));
    CHECK(er(1, -2) == er(-1, 2));
    CHECK(ExtRational(BigInt(-3), BigInt(0)) == ExtRational::neg_infinity());
    CHECK(ExtRational::neg_infinity() < er(-1000000, 1));
    CHECK(er(1000000, 1) < ExtRational::infinity());
    CHECK(ExtRational::neg_infinity().circle() == ExtRational::infinity());
    CHECK_THROWS_AS(ExtRational(0, 0), std::invalid_argument);

    for (auto* txt : {"1/2", "-3/7", "inf", "-inf", "0/1", "17/1"}) {
        auto r = ExtRational::parse(txt);
        REQUIRE(r.has_value());
        CHECK(r->str() == txt);
    }
}

TEST_CASE("mediant of Farey neighbours") {
    CHECK(mediant(er(0, 1), er(1, 1)) == er(1, 2));
    CHECK(mediant(ExtRational::neg_infinity(), er(0, 1)) == er(-1, 1));
    CHECK(mediant(er(1, 2), er(1, 1)) == er(2, 3));
    CHECK_THROWS_AS(mediant(er(1, 3), er(3, 5)), std::invalid_argument);
}

TEST_CASE("farey consecutivity") {
    CHECK(farey_consecutive(er(0, 1), er(1, 1)));
    CHECK(farey_consecutive(er(1, 3), er(2, 5)));
    CHECK_FALSE(farey_consecutive(er(1, 3), er(3, 5)));
    CHECK(farey_consecutive(ExtRational::neg_infinity(), ExtRational::infinity()));
}

TEST_CASE("mediants stay between their brackets and remain consecutive (depth 12)") {
    walk(er(0, 1), ExtRational::infinity(), 12,
         [](const ExtRational& lo, const ExtRational& m, const ExtRational& hi) {
             CHECK(lo < m);
             CHECK((hi.is_pos_infinity() || m < hi));
             CHECK(farey_consecutive(lo, m));
             CHECK(farey_consecutive(m, hi));
         });
    walk(ExtRational::neg_infinity(), er(0, 1), 12,
         [](const ExtRational& lo, const ExtRational& m, const ExtRational& hi) {
             CHECK((lo.is_neg_infinity() || lo < m));
             CHECK(m < hi);
             CHECK(farey_consecutive(lo, m));
             CHECK(farey_consecutive(m, hi));
         });
}

TEST_CASE("cyclic order on the circle") {
    ExtRational zero = er(0, 1), one = er(1, 1), minus_one = er(-1, 1);
    ExtRational inf = ExtRational::infinity();
    CHECK(cyclic_order(zero, one, inf));
    CHECK_FALSE(cyclic_order(zero, inf, one));
    CHECK(cyclic_order(inf, minus_one, zero));
    CHECK(cyclic_order(one, inf, zero));
    CHECK_THROWS_AS(cyclic_order(zero, zero, one), std::invalid_argument);
    // -inf and inf coincide on the circle.
    CHECK_THROWS_AS(cyclic_order(inf, ExtRational::neg_infinity(), zero), std::invalid_argument);
}
