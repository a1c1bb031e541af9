#pragma once

#include "tlab/cuntz.hpp"
#include "tlab/group_algebra.hpp"
#include "tlab/numeric.hpp"
#include "tlab/plmap.hpp"

#include <cstdint>
#include <vector>

namespace tlab {

// Finite compression P op P of an exact operator. Entries stay exact
// rationals until a norm estimate converts them to doubles (compression is
// norm-nonincreasing, so all spectral estimates are lower bounds of the
// operator norm).
struct Truncation {
    std::size_t dim = 0;
    int depth = -1;  // dyadic depth for pi-truncations, -1 otherwise
    std::vector<Rational> entries;  // row-major dim x dim

    Rational& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
    const Rational& at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
};

// Compression of the l^2(X) action to the dyadics k/2^depth of [0, 1).
Truncation truncate_pi(const GroupAlgebraElement& x, int depth);
Truncation truncate_pi(const CuntzWordSum& u, int depth);

// Compression of left multiplication by x to the ball of radius `radius` in
// the given generators (rows and columns indexed by canonical elements).
Truncation truncate_lambda(const GroupAlgebraElement& x, const std::vector<PLMap>& gens,
                           int radius);

struct NormEstimate {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x74686f6d70736eull;

// Power iteration on M^T M from a seeded start vector; the returned value is
// a lower bound of the compressed operator norm up to tol.
NormEstimate norm_estimate(const Truncation& t, double tol = 1e-10, int max_iter = 100000,
                           std::uint64_t seed = kDefaultSeed);

// ||M^m - P1|| for m = 1..m_max, where M is the depth-d compression of the
// average of pi(g_k) over generators of V_0 (everything fixing [0,1/2)
// pointwise) and P1 projects onto the basis points of [0, 1/2).
std::vector<double> average_power_experiment(const std::vector<PLMap>& gens, int m_max, int depth,
                                             double tol = 1e-10, int max_iter = 100000,
                                             std::uint64_t seed = kDefaultSeed);

// ||x + y|| >= ||x|| at the compressed level, for nonnegative x, y.
bool norm_monotonicity_check(const GroupAlgebraElement& x, const GroupAlgebraElement& y, int depth,
                             double tol = 1e-10);

struct ConvexSearchResult {
    std::vector<Rational> weights;  // nonnegative, sum exactly 1
    std::vector<PLMap> conjugators;
    double achieved_norm_estimate = 0.0;
    int depth = 0;
    int iterations = 0;
    std::uint64_t seed = 0;
    std::vector<double> best_trace;  // best estimate so far, nonincreasing
};

// Projected subgradient descent over the weight simplex minimizing the
// truncated norm estimate of sum_i w_i lambda(h_i) base lambda(h_i)^*.
ConvexSearchResult convex_minimize(const GroupAlgebraElement& base,
                                   const std::vector<PLMap>& conjugators, int depth, int iterations,
                                   std::uint64_t seed = kDefaultSeed);

// Exact check of
//   sum_{i,j} s_i t_j lambda(u_i v_j)(lambda(a)+lambda(b))lambda(u_i v_j)^*
//     = a~ + b~
// and its companion for lambda(ab) - lambda(a) - lambda(b), where the u's
// fix [0,1/2) pointwise (the support side of a) and the v's fix [1/2,1)
// (the side of b). Throws on a support precondition violation.
bool commuting_support_identity_check(const std::vector<PLMap>& conj_a,
                                      const std::vector<Rational>& weights_a,
                                      const std::vector<PLMap>& conj_b,
                                      const std::vector<Rational>& weights_b);

// The convex-hull identity behind the ideal criterion: the difference
//   sum_i w_i lambda(h_i)(lambda(a)+lambda(b))lambda(h_i)^*
//     - (1 + sum_i w_i lambda(h_i (ab) h_i^-1))
// equals the same combination of conjugates of lambda(a)+lambda(b)-1-
// lambda(ab) exactly in the group algebra, and its image under pi vanishes.
bool convex_hull_identity_check(const std::vector<PLMap>& conjugators,
                                const std::vector<Rational>& weights);

}  // namespace tlab
