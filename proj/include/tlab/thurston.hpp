#pragma once

#include "tlab/plmap.hpp"
#include "tlab/ppsl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tlab {

struct IsoOptions {
    std::size_t piece_budget = 4096;  // max subdivision pieces
    int verify_depth = 8;             // exact verification grid depth
};

// The isomorphism Phi : PPSL(2,Z) -> T, g |-> phi o g o phi^-1, computed by
// adaptive subdivision with exact verification on a dyadic grid. Throws
// BudgetExhausted when the subdivision budget runs out; never returns an
// unverified result.
PLMap push_forward(const PPSLMap& g, const IsoOptions& opt = {});

// Phi^-1 : T -> PPSL(2,Z). Per-arc matrices are recovered with
// solve_two_point; the round trip push_forward(pull_back(h)) == h is
// required before returning. Throws on V \ T input.
PPSLMap pull_back(const PLMap& h, const IsoOptions& opt = {});

// The matrix of h when h lies in Lambda = Phi(PSL(2,Z)), i.e. when
// pull_back(h) has no breakpoints.
std::optional<PSL2Z> lambda_membership(const PLMap& h, const IsoOptions& opt = {});

// The free generators of Lambda as elements of T: x = D^2 = Phi(a) of order
// 2 and y = C = Phi(b) of order 3.
const PLMap& lambda_gen_x();
const PLMap& lambda_gen_y();

// Reduced word in Z2 * Z3 over the letters x (order 2) and y (order 3):
// alternating syllables, x with exponent 1 and y with exponent 1 or 2
// (-1 accepted as 2). Returns true iff the corresponding element of Lambda
// is nontrivial; rejects non-reduced input.
struct LambdaSyllable {
    char letter;  // 'x' or 'y'
    int exponent = 1;
};
bool reduced_word_nontrivial(const std::vector<LambdaSyllable>& word);

// Outcome of the centralizer computation {g in Lambda : gf = fg} for
// f in V \ {e}, following the three-case analysis: inside Lambda the
// centralizer is only classified (cyclic) and ball-searched; outside Lambda
// it is computed completely from breakpoint / discontinuity permutations
// and two-point interpolation.
struct CentralizerReport {
    enum class Case { InLambda, InTMinusLambda, InVMinusT };
    enum class CyclicClass { FiniteCyclic, InfiniteCyclic };

    Case kind;
    std::vector<PLMap> elements;  // every element exactly commutes with f
    std::optional<CyclicClass> classification;  // InLambda only
    bool complete = false;  // true when the listed set is provably complete
    std::string certificate;
};

CentralizerReport centralizer_in_lambda(const PLMap& f, int word_bound = 8,
                                        const IsoOptions& opt = {});

}  // namespace tlab
