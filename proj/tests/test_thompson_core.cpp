#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlab/numeric.hpp"
#include "tlab/plmap.hpp"

#include <set>

using namespace tlab;

namespace {

const PLMap& C() { return generator(GeneratorName::C); }
const PLMap& D() { return generator(GeneratorName::D); }
const PLMap& A() { return generator(GeneratorName::A); }
const PLMap& B() { return generator(GeneratorName::B); }
PLMap D2() { return compose(D(), D()); }

std::vector<Dyadic> grid(int depth) {
    std::vector<Dyadic> pts;
    for (BigInt k = 0, n = pow2(static_cast<unsigned>(depth)); k < n; ++k)
        pts.emplace_back(k, depth);
    return pts;
}

}  // namespace

TEST_CASE("PLMap validation rejects bad piece lists") {
    CHECK_THROWS_AS(PLMap({}), std::invalid_argument);
    CHECK_THROWS_AS(PLMap({Piece{Dyadic::half(), 0, Dyadic::zero()}}), std::invalid_argument);
    // Images overlap: both halves map onto [0, 1/2).
    CHECK_THROWS_AS(PLMap({Piece{Dyadic::zero(), 0, Dyadic::zero()},
                           Piece{Dyadic::half(), 0, -Dyadic::half()}}),
                    std::invalid_argument);
    // Image leaves [0, 1).
    CHECK_THROWS_AS(PLMap({Piece{Dyadic::zero(), 1, Dyadic::zero()}}), std::invalid_argument);
}

TEST_CASE("evaluate on the generator tables") {
    CHECK(D()(Dyadic::zero()) == Dyadic(3, 2));
    CHECK(C()(Dyadic::zero()) == Dyadic(3, 2));
    // Oracle: A = D^2 o C^2 evaluated by chaining, no compose() involved.
    Dyadic chained = D()(D()(C()(C()(Dyadic::half()))));
    CHECK(chained == Dyadic(1, 2));
    CHECK(A()(Dyadic::half()) == Dyadic(1, 2));
    CHECK_THROWS_AS(A()(Dyadic::one()), std::domain_error);
}

TEST_CASE("compose matches pointwise evaluation") {
    // Brute-force composition oracle on a dyadic grid.
    std::vector<std::pair<PLMap, PLMap>> pairs{{A(), C()}, {C(), D()}, {B(), A()}, {D(), D()}};
    for (auto& [f, g] : pairs) {
        PLMap fg = compose(f, g);
        for (auto& x : grid(6)) CHECK(fg(x) == f(g(x)));
    }
}

TEST_CASE("paper generator identities") {
    CHECK(compose(C(), compose(C(), C())).is_identity());
    CHECK(compose(D2(), D2()).is_identity());
    CHECK(A() == compose(D2(), compose(C(), C())));
    CHECK(B() == compose(compose(C(), C()), compose(D(), A())));
    CHECK(compose(A(), C()) == D2());
    CHECK(compose(C(), A()) != D2());  // the other reading of "CA"

    PLMap dd = compose(D(), D());
    PLMap expected({Piece{Dyadic::zero(), 0, Dyadic::half()}, Piece{Dyadic::half(), 0, -Dyadic::half()}});
    CHECK(dd == expected);
}

TEST_CASE("inverse") {
    CHECK(PLMap::identity().inverse().is_identity());
    CHECK(D().inverse() == compose(D(), compose(D(), D())));
    PLMap a_inv({Piece{Dyadic::zero(), 1, Dyadic::zero()}, Piece{Dyadic(1, 2), 0, Dyadic(1, 2)},
                 Piece{Dyadic::half(), -1, Dyadic::half()}});
    CHECK(A().inverse() == a_inv);
    for (auto& x : grid(6)) CHECK(A().inverse()(A()(x)) == x);
}

TEST_CASE("group axioms at desk scale") {
    auto ball = ball_enumerate({C(), D()}, 4);
    for (auto& f : ball) CHECK(compose(f, f.inverse()).is_identity());
    SplitMix64 rng(11);
    for (int i = 0; i < 40; ++i) {
        const PLMap& f = ball[rng.next_below(ball.size())];
        const PLMap& g = ball[rng.next_below(ball.size())];
        const PLMap& h = ball[rng.next_below(ball.size())];
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("classification into F, T, V") {
    CHECK(A().classify() == PLMap::Membership::F);
    CHECK(B().classify() == PLMap::Membership::F);
    CHECK(D().classify() == PLMap::Membership::T_minus_F);
    CHECK(C().classify() == PLMap::Membership::T_minus_F);
    CHECK(generator(GeneratorName::Pi0).classify() == PLMap::Membership::V_minus_T);
    CHECK(PLMap::identity().classify() == PLMap::Membership::F);

    // classify(g) = classify(g^-1) and the chain F < T < V is respected.
    for (auto& g : ball_enumerate({C(), D(), generator(GeneratorName::Pi0)}, 2))
        CHECK(g.classify() == g.inverse().classify());
}

TEST_CASE("circle discontinuities") {
    CHECK(PLMap::identity().circle_discontinuities().empty());
    CHECK(D().circle_discontinuities().empty());
    std::vector<Dyadic> expected{Dyadic::zero(), Dyadic::half(), Dyadic(3, 2)};
    CHECK(generator(GeneratorName::Pi0).circle_discontinuities() == expected);
}

TEST_CASE("limits at the endpoints") {
    CHECK(A().limit_at_zero() == Dyadic::zero());
    CHECK(D().limit_at_zero() == Dyadic(3, 2));
    CHECK(D().limit_at_one() == Dyadic(3, 2));
    CHECK(A().limit_at_one() == Dyadic::one());
}

TEST_CASE("word evaluation") {
    PLMap a = word_to_element(GroupWord::parse("C D C"));
    // The commuting pair from the kernel construction, frozen from the
    // eighth-grid polylines.
    PLMap a_expected({Piece{Dyadic::zero(), 0, Dyadic::zero()}, Piece{Dyadic::half(), 1, -Dyadic::half()},
                      Piece{Dyadic(5, 3), 0, Dyadic(1, 3)}, Piece{Dyadic(3, 2), -1, Dyadic::half()}});
    CHECK(a == a_expected);
    PLMap b = word_to_element(GroupWord::parse("D^2 C D C D^2"));
    PLMap b_expected({Piece{Dyadic::zero(), 1, Dyadic::zero()}, Piece{Dyadic(1, 3), 0, Dyadic(1, 3)},
                      Piece{Dyadic(1, 2), -1, Dyadic(1, 2)}, Piece{Dyadic::half(), 0, Dyadic::zero()}});
    CHECK(b == b_expected);
    CHECK(compose(a, b) == compose(b, a));
    CHECK(word_to_element(GroupWord::parse("")).is_identity());
    CHECK(word_to_element(GroupWord::parse("e")).is_identity());
    CHECK(word_to_element(GroupWord::parse("D^-1")) == D().inverse());
    CHECK_THROWS_AS(word_to_element(GroupWord::parse("Z")), std::invalid_argument);

    // Conjugation by D^2 exchanges the pair's supports.
    CHECK(b == compose(D2(), compose(a, D2())));
}

TEST_CASE("pair permutation property on dyadics") {
    PLMap a = word_to_element(GroupWord::parse("C D C"));
    PLMap b = word_to_element(GroupWord::parse("D^2 C D C D^2"));
    PLMap ab = compose(a, b);
    for (auto& x : grid(10)) {
        std::multiset<Dyadic> lhs{a(x), b(x)}, rhs{ab(x), x};
        CHECK(lhs == rhs);
    }
}

TEST_CASE("group word canonical form and parsing") {
    GroupWord w = GroupWord::parse("C C D^2 D^-2 A");
    CHECK(w.str() == "C^2 A");
    CHECK(GroupWord::parse("e").str() == "e");
    CHECK(GroupWord::parse(w.str()) == w);
    CHECK_THROWS_AS(GroupWord::parse("C^x"), std::invalid_argument);
}

TEST_CASE("tree pairs") {
    TreePair id_pair{{"", ""}};
    CHECK(tree_pair(PLMap::identity()) == id_pair);
    TreePair d2_pair{{"1", "2"}, {"2", "1"}};
    CHECK(tree_pair(D2()) == d2_pair);
    TreePair a_pair{{"1", "11"}, {"21", "12"}, {"22", "2"}};
    CHECK(tree_pair(A()) == a_pair);

    for (auto& g : ball_enumerate({C(), D(), generator(GeneratorName::Pi0)}, 3))
        CHECK(from_tree_pair(tree_pair(g)) == g);
}

TEST_CASE("ball enumeration") {
    auto b0 = ball_enumerate({C(), D()}, 0);
    CHECK(b0.size() == 1);
    CHECK(b0[0].is_identity());

    auto b1 = ball_enumerate({C(), D()}, 1);
    CHECK(b1.size() == 5);  // e, C, C^2, D, D^3
    std::set<PLMap> expected{PLMap::identity(), C(), compose(C(), C()), D(), D().inverse()};
    CHECK(std::set<PLMap>(b1.begin(), b1.end()) == expected);

    auto b5 = ball_enumerate({D2()}, 5);
    CHECK(b5.size() == 2);
}

TEST_CASE("rescale_upper") {
    CHECK(rescale_upper(PLMap::identity()).is_identity());
    PLMap swap_upper({Piece{Dyadic::zero(), 0, Dyadic::zero()}, Piece{Dyadic::half(), 0, Dyadic(1, 2)},
                      Piece{Dyadic(3, 2), 0, -Dyadic(1, 2)}});
    CHECK(rescale_upper(D2()) == swap_upper);
    // The output always fixes [0, 1/2) pointwise.
    for (auto& g : ball_enumerate({C(), D()}, 2)) {
        PLMap r = rescale_upper(g);
        for (auto& x : grid(5))
            if (x < Dyadic::half()) CHECK(r(x) == x);
    }
}
