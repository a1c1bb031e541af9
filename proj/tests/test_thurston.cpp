#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlab/budget.hpp"
#include "tlab/question_mark.hpp"
#include "tlab/thurston.hpp"

#include <cstdlib>
#include <set>

using namespace tlab;

namespace {

const PLMap& C() { return generator(GeneratorName::C); }
const PLMap& D() { return generator(GeneratorName::D); }
PLMap D2() { return compose(D(), D()); }

ExtRational er(long long n, long long d) { return ExtRational(n, d); }

}  // namespace

TEST_CASE("push_forward sends the free generators to D^2 and C") {
    CHECK(push_forward(PPSLMap::single(PSL2Z::gen_a())) == D2());
    CHECK(push_forward(PPSLMap::single(PSL2Z::gen_b())) == C());
    CHECK(push_forward(PPSLMap()).is_identity());
}

TEST_CASE("pull_back inverts push_forward on the generators") {
    CHECK(pull_back(D2()) == PPSLMap::single(PSL2Z::gen_a()));
    CHECK(pull_back(C()) == PPSLMap::single(PSL2Z::gen_b()));
    CHECK(pull_back(PLMap::identity()).is_identity());
    CHECK_THROWS_AS(pull_back(generator(GeneratorName::Pi0)), std::domain_error);
}

TEST_CASE("pull_back of D crosses phi exactly") {
    PPSLMap ft = pull_back(D());
    CHECK_FALSE(ft.breakpoints().empty());
    for (auto& bp : ft.breakpoints()) CHECK(bp.den() >= 0);  // rational circle points
    // Cross-module oracle: the pulled-back map agrees with phi^-1 o D o phi.
    for (auto& r : {er(0, 1), er(1, 1), er(-2, 3), er(5, 2), ExtRational::infinity()})
        CHECK(ft(r) == phi_circle_inv(D()(phi_circle(r))));
}

TEST_CASE("pull_back composition breakpoints refine as expected") {
    PPSLMap g = pull_back(D());
    PPSLMap h = pull_back(compose(C(), D()));
    PPSLMap gh = compose(g, h);
    std::set<ExtRational> allowed;
    for (auto& x : h.breakpoints()) allowed.insert(x);
    PPSLMap h_inv = h.inverse();
    for (auto& x : g.breakpoints()) allowed.insert(h_inv(x));
    for (auto& x : gh.breakpoints()) CHECK(allowed.count(x) == 1);
}

TEST_CASE("lambda membership") {
    auto d2_matrix = lambda_membership(D2());
    REQUIRE(d2_matrix.has_value());
    CHECK(*d2_matrix == PSL2Z::gen_a());

    auto a_matrix = lambda_membership(generator(GeneratorName::A));
    REQUIRE(a_matrix.has_value());
    CHECK(*a_matrix == PSL2Z(1, 0, 1, 1));
    CHECK(a_matrix->classify_trace() == PSL2Z::TraceClass::Parabolic);

    CHECK_FALSE(lambda_membership(D()).has_value());
}

TEST_CASE("isomorphism property on generator words") {
    std::vector<PSL2Z> words;
    std::vector<PSL2Z> frontier{PSL2Z()};
    for (int len = 1; len <= 3; ++len) {
        std::vector<PSL2Z> next;
        for (auto& w : frontier)
            for (auto& letter : {PSL2Z::gen_a(), PSL2Z::gen_b()}) {
                next.push_back(letter * w);
                words.push_back(next.back());
            }
        frontier = std::move(next);
    }
    for (auto& u : words)
        for (auto& v : words)
            CHECK(push_forward(PPSLMap::single(u * v)) ==
                  compose(push_forward(PPSLMap::single(u)), push_forward(PPSLMap::single(v))));
}

TEST_CASE("round trips through the isomorphism") {
    for (auto& h : ball_enumerate({C(), D2()}, 3)) CHECK(push_forward(pull_back(h)) == h);
}

TEST_CASE("push_forward respects the subdivision budget") {
    IsoOptions opt;
    opt.piece_budget = 2;
    CHECK_THROWS_AS(push_forward(PPSLMap::single(PSL2Z::gen_b()), opt), BudgetExhausted);
}

TEST_CASE("reduced words in Lambda are nontrivial") {
    CHECK_FALSE(reduced_word_nontrivial({}));  // empty word is trivial
    CHECK(reduced_word_nontrivial({{'x', 1}}));
    CHECK(reduced_word_nontrivial({{'y', 1}}));
    CHECK(reduced_word_nontrivial({{'y', 2}}));
    CHECK_THROWS_AS(reduced_word_nontrivial({{'x', 1}, {'x', 1}}), std::invalid_argument);
    CHECK_THROWS_AS(reduced_word_nontrivial({{'x', 2}}), std::invalid_argument);
    CHECK_THROWS_AS(reduced_word_nontrivial({{'y', 3}}), std::invalid_argument);

    for (int reps = 1; reps <= 6; ++reps) {
        std::vector<LambdaSyllable> word;
        for (int i = 0; i < reps; ++i) {
            word.push_back({'x', 1});
            word.push_back({'y', 1});
        }
        CHECK(reduced_word_nontrivial(word));
    }
    // y^-1 is accepted as the order-3 inverse.
    CHECK(reduced_word_nontrivial({{'x', 1}, {'y', -1}}));
}

TEST_CASE("centralizer of D is {e, D^2}") {
    CentralizerReport rep = centralizer_in_lambda(D());
    CHECK(rep.kind == CentralizerReport::Case::InTMinusLambda);
    CHECK(rep.complete);
    std::vector<PLMap> expected{PLMap::identity(), D2()};
    std::sort(expected.begin(), expected.end());
    CHECK(rep.elements == expected);
    for (auto& g : rep.elements) CHECK(compose(g, D()) == compose(D(), g));
}

TEST_CASE("centralizer of D^2 inside Lambda") {
    CentralizerReport rep = centralizer_in_lambda(D2(), 8);
    CHECK(rep.kind == CentralizerReport::Case::InLambda);
    REQUIRE(rep.classification.has_value());
    CHECK(*rep.classification == CentralizerReport::CyclicClass::FiniteCyclic);
    std::vector<PLMap> expected{PLMap::identity(), D2()};
    std::sort(expected.begin(), expected.end());
    CHECK(rep.elements == expected);
    CHECK_FALSE(rep.complete);  // completeness is not claimed inside Lambda
}

TEST_CASE("centralizer of pi0 is complete and finite") {
    CentralizerReport rep = centralizer_in_lambda(generator(GeneratorName::Pi0));
    CHECK(rep.kind == CentralizerReport::Case::InVMinusT);
    CHECK(rep.complete);
    bool has_identity = false;
    for (auto& g : rep.elements) {
        has_identity = has_identity || g.is_identity();
        CHECK(compose(g, generator(GeneratorName::Pi0)) ==
              compose(generator(GeneratorName::Pi0), g));
    }
    CHECK(has_identity);
}

TEST_CASE("centralizer rejects the identity") {
    CHECK_THROWS_AS(centralizer_in_lambda(PLMap::identity()), std::invalid_argument);
}

TEST_CASE("hyperbolic element classified as infinite cyclic") {
    PLMap h = push_forward(PPSLMap::single(PSL2Z(2, 1, 1, 1)));  // trace 3
    CentralizerReport rep = centralizer_in_lambda(h, 4);
    CHECK(rep.kind == CentralizerReport::Case::InLambda);
    REQUIRE(rep.classification.has_value());
    CHECK(*rep.classification == CentralizerReport::CyclicClass::InfiniteCyclic);
    for (auto& g : rep.elements) CHECK(compose(g, h) == compose(h, g));
}
