#include "tlab/spectral.hpp"

#include "tlab/budget.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tlab {

namespace {

// Basis index of a dyadic at depth d, or -1 when it needs more depth.
long basis_index(const Dyadic& y, int depth) {
    if (y < Dyadic::zero() || Dyadic::one() <= y || y.exponent() > depth) return -1;
    BigInt idx = y.numerator() * pow2(static_cast<unsigned>(depth - y.exponent()));
    return static_cast<long>(idx);
}

Eigen::MatrixXd to_double(const Truncation& t) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(t.dim), static_cast<Eigen::Index>(t.dim));
    for (std::size_t r = 0; r < t.dim; ++r)
        for (std::size_t c = 0; c < t.dim; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                t.at(r, c).convert_to<double>();
    return m;
}

struct SpectralPair {
    NormEstimate estimate;
    Eigen::VectorXd right;  // top right-singular vector (unit)
};

// Power iteration on M^T M. The estimate ||M v|| of the final unit iterate
// is always a valid lower bound of ||M||.
SpectralPair spectral_norm(const Eigen::MatrixXd& m, double tol, int max_iter,
                           std::uint64_t seed) {
    const Eigen::Index n = m.cols();
    SpectralPair out;
    out.right = Eigen::VectorXd::Zero(n);
    if (n == 0 || m.lpNorm<Eigen::Infinity>() == 0.0) {
        out.estimate = {0.0, true, 0};
        return out;
    }
    SplitMix64 rng(seed);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.next_double() + 0.5;
    v.normalize();
    double prev = -1.0;
    NormEstimate est;
    for (int iter = 1; iter <= max_iter; ++iter) {
        Eigen::VectorXd w = m * v;
        double sigma = w.norm();
        est.iterations = iter;
        if (sigma == 0.0) {
            // Restart away from the kernel.
            for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.next_double() + 0.5;
            v.normalize();
            continue;
        }
        est.value = sigma;
        if (std::abs(sigma - prev) <= tol) {
            est.converged = true;
            break;
        }
        prev = sigma;
        Eigen::VectorXd u = m.transpose() * w;
        double un = u.norm();
        if (un == 0.0) {
            est.converged = true;
            break;
        }
        v = u / un;
    }
    out.estimate = est;
    out.right = v;
    return out;
}

}  // namespace

Truncation truncate_pi(const GroupAlgebraElement& x, int depth) {
    if (depth < 1) throw std::invalid_argument("truncate_pi: depth must be >= 1");
    Truncation t;
    t.depth = depth;
    t.dim = static_cast<std::size_t>(1) << depth;
    t.entries.assign(t.dim * t.dim, Rational(0));
    for (std::size_t col = 0; col < t.dim; ++col) {
        Dyadic point(BigInt(static_cast<unsigned long long>(col)), depth);
        for (auto& [g, c] : x.terms()) {
            long row = basis_index(g(point), depth);
            if (row >= 0) t.at(static_cast<std::size_t>(row), col) += c;
        }
    }
    return t;
}

Truncation truncate_pi(const CuntzWordSum& u, int depth) {
    if (depth < 1) throw std::invalid_argument("truncate_pi: depth must be >= 1");
    Truncation t;
    t.depth = depth;
    t.dim = static_cast<std::size_t>(1) << depth;
    t.entries.assign(t.dim * t.dim, Rational(0));
    for (std::size_t col = 0; col < t.dim; ++col) {
        Dyadic point(BigInt(static_cast<unsigned long long>(col)), depth);
        for (auto& [y, c] : apply_to_basis(u, point)) {
            long row = basis_index(y, depth);
            if (row >= 0) t.at(static_cast<std::size_t>(row), col) += c;
        }
    }
    return t;
}

Truncation truncate_lambda(const GroupAlgebraElement& x, const std::vector<PLMap>& gens,
                           int radius) {
    std::vector<PLMap> ball = ball_enumerate(gens, radius);
    if (ball.size() > capped_budget(static_cast<std::size_t>(-1)))
        throw BudgetExhausted("truncate_lambda: ball exceeds budget");
    std::map<PLMap, std::size_t> index;
    for (std::size_t i = 0; i < ball.size(); ++i) index.emplace(ball[i], i);
    Truncation t;
    t.dim = ball.size();
    t.entries.assign(t.dim * t.dim, Rational(0));
    for (std::size_t col = 0; col < ball.size(); ++col)
        for (auto& [k, c] : x.terms()) {
            auto it = index.find(compose(k, ball[col]));
            if (it != index.end()) t.at(it->second, col) += c;
        }
    return t;
}

NormEstimate norm_estimate(const Truncation& t, double tol, int max_iter, std::uint64_t seed) {
    return spectral_norm(to_double(t), tol, max_iter, seed).estimate;
}

namespace {

bool fixes_lower_half(const PLMap& g) {
    const auto& pieces = g.pieces();
    if (pieces[0].slope_exp != 0 || !pieces[0].offset.is_zero()) return false;
    return pieces.size() == 1 || pieces[1].src_start >= Dyadic::half();
}

bool fixes_upper_half(const PLMap& g) {
    const auto& last = g.pieces().back();
    return last.slope_exp == 0 && last.offset.is_zero() && last.src_start <= Dyadic::half();
}

}  // namespace

std::vector<double> average_power_experiment(const std::vector<PLMap>& gens, int m_max, int depth,
                                             double tol, int max_iter, std::uint64_t seed) {
    if (gens.empty()) throw std::invalid_argument("average_power_experiment: no generators");
    for (auto& g : gens)
        if (!fixes_lower_half(g))
            throw std::invalid_argument("average_power_experiment: generator does not fix [0,1/2)");

    GroupAlgebraElement avg;
    for (auto& g : gens) avg = avg + GroupAlgebraElement::lambda(g, Rational(1, gens.size()));
    Eigen::MatrixXd m = to_double(truncate_pi(avg, depth));

    const Eigen::Index dim = m.rows();
    Eigen::MatrixXd p1 = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim / 2; ++i) p1(i, i) = 1.0;

    std::vector<double> norms;
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(dim, dim);
    for (int step = 1; step <= m_max; ++step) {
        power = power * m;
        norms.push_back(spectral_norm(power - p1, tol, max_iter, seed).estimate.value);
    }
    return norms;
}

bool norm_monotonicity_check(const GroupAlgebraElement& x, const GroupAlgebraElement& y, int depth,
                             double tol) {
    if (!x.nonnegative() || !y.nonnegative())
        throw std::invalid_argument("norm_monotonicity_check: coefficients must be nonnegative");
    double whole = norm_estimate(truncate_pi(x + y, depth)).value;
    double part = norm_estimate(truncate_pi(x, depth)).value;
    return whole >= part - tol;
}

namespace {

// Euclidean projection onto the probability simplex.
Eigen::VectorXd project_simplex(Eigen::VectorXd v) {
    const Eigen::Index n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cumulative = 0.0, theta = 0.0;
    int rho = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        cumulative += u[static_cast<std::size_t>(j)];
        double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
        if (u[static_cast<std::size_t>(j)] - candidate > 0.0) {
            rho = static_cast<int>(j + 1);
            theta = candidate;
        }
    }
    (void)rho;
    for (Eigen::Index i = 0; i < n; ++i) v(i) = std::max(0.0, v(i) - theta);
    return v;
}

}  // namespace

ConvexSearchResult convex_minimize(const GroupAlgebraElement& base,
                                   const std::vector<PLMap>& conjugators, int depth, int iterations,
                                   std::uint64_t seed) {
    if (conjugators.empty()) throw std::invalid_argument("convex_minimize: no conjugators");
    const std::size_t n = conjugators.size();

    std::vector<Eigen::MatrixXd> family;
    family.reserve(n);
    for (auto& h : conjugators) family.push_back(to_double(truncate_pi(base.conjugate_by(h), depth)));

    Eigen::VectorXd w = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n));
    auto assemble = [&](const Eigen::VectorXd& weights) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(family[0].rows(), family[0].cols());
        for (std::size_t i = 0; i < n; ++i) a += weights(static_cast<Eigen::Index>(i)) * family[i];
        return a;
    };

    ConvexSearchResult result;
    result.conjugators = conjugators;
    result.depth = depth;
    result.iterations = iterations;
    result.seed = seed;

    Eigen::VectorXd best_w = w;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= iterations; ++k) {
        Eigen::MatrixXd a = assemble(w);
        SpectralPair top = spectral_norm(a, 1e-10, 20000, seed);
        if (top.estimate.value < best) {
            best = top.estimate.value;
            best_w = w;
        }
        result.best_trace.push_back(best);
        // Subgradient of the norm at a: grad_i = u^T T_i v with u = A v / s.
        Eigen::VectorXd av = a * top.right;
        double sigma = av.norm();
        Eigen::VectorXd u = sigma > 0 ? Eigen::VectorXd(av / sigma) : av;
        Eigen::VectorXd grad(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i)
            grad(static_cast<Eigen::Index>(i)) = u.dot(family[i] * top.right);
        double step = 0.5 / std::sqrt(static_cast<double>(k));
        w = project_simplex(w - step * grad);
    }

    // Exact simplex weights: snap to a power-of-two grid and renormalize.
    std::vector<Rational> weights(n, Rational(0));
    Rational total = 0;
    const BigInt denom = pow2(32);
    for (std::size_t i = 0; i < n; ++i) {
        double scaled = best_w(static_cast<Eigen::Index>(i)) * std::pow(2.0, 32);
        BigInt num = static_cast<long long>(std::llround(std::max(0.0, scaled)));
        weights[i] = Rational(num, denom);
        total += weights[i];
    }
    if (total == 0) {
        weights.assign(n, Rational(1, n));
    } else {
        for (auto& wi : weights) wi /= total;
    }
    result.weights = weights;

    Eigen::VectorXd w_exact(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        w_exact(static_cast<Eigen::Index>(i)) = weights[i].convert_to<double>();
    result.achieved_norm_estimate = spectral_norm(assemble(w_exact), 1e-10, 20000, seed).estimate.value;
    return result;
}

namespace {

GroupAlgebraElement thompson_a() {
    return GroupAlgebraElement::lambda(word_to_element(GroupWord::parse("C D C")));
}

GroupAlgebraElement thompson_b() {
    return GroupAlgebraElement::lambda(word_to_element(GroupWord::parse("D^2 C D C D^2")));
}

void check_unit_weights(const std::vector<Rational>& weights, std::size_t n, const char* who) {
    if (weights.size() != n) throw std::invalid_argument(std::string(who) + ": weight count mismatch");
    Rational total = 0;
    for (auto& w : weights) {
        if (w < 0) throw std::invalid_argument(std::string(who) + ": negative weight");
        total += w;
    }
    if (total != 1) throw std::invalid_argument(std::string(who) + ": weights must sum to 1");
}

}  // namespace

bool commuting_support_identity_check(const std::vector<PLMap>& conj_a,
                                      const std::vector<Rational>& weights_a,
                                      const std::vector<PLMap>& conj_b,
                                      const std::vector<Rational>& weights_b) {
    check_unit_weights(weights_a, conj_a.size(), "commuting_support_identity_check");
    check_unit_weights(weights_b, conj_b.size(), "commuting_support_identity_check");
    for (auto& u : conj_a)
        if (!fixes_lower_half(u))
            throw std::invalid_argument(
                "commuting_support_identity_check: a-side conjugator must fix [0,1/2)");
    for (auto& v : conj_b)
        if (!fixes_upper_half(v))
            throw std::invalid_argument(
                "commuting_support_identity_check: b-side conjugator must fix [1/2,1)");

    GroupAlgebraElement a = thompson_a(), b = thompson_b();
    GroupAlgebraElement a_tilde, b_tilde;
    for (std::size_t i = 0; i < conj_a.size(); ++i)
        a_tilde = a_tilde + a.conjugate_by(conj_a[i]) * weights_a[i];
    for (std::size_t j = 0; j < conj_b.size(); ++j)
        b_tilde = b_tilde + b.conjugate_by(conj_b[j]) * weights_b[j];

    GroupAlgebraElement sum_side, product_side;
    for (std::size_t i = 0; i < conj_a.size(); ++i)
        for (std::size_t j = 0; j < conj_b.size(); ++j) {
            PLMap h = compose(conj_a[i], conj_b[j]);
            Rational w = weights_a[i] * weights_b[j];
            sum_side = sum_side + (a + b).conjugate_by(h) * w;
            product_side = product_side + (a * b - a - b).conjugate_by(h) * w;
        }

    return sum_side == a_tilde + b_tilde &&
           product_side == a_tilde * b_tilde - a_tilde - b_tilde;
}

bool convex_hull_identity_check(const std::vector<PLMap>& conjugators,
                                const std::vector<Rational>& weights) {
    check_unit_weights(weights, conjugators.size(), "convex_hull_identity_check");
    GroupAlgebraElement a = thompson_a(), b = thompson_b();
    GroupAlgebraElement ab = a * b;
    GroupAlgebraElement lhs, conjugated_witness;
    GroupAlgebraElement rhs = GroupAlgebraElement::one();
    GroupAlgebraElement witness = a + b - GroupAlgebraElement::one() - ab;
    for (std::size_t i = 0; i < conjugators.size(); ++i) {
        lhs = lhs + (a + b).conjugate_by(conjugators[i]) * weights[i];
        rhs = rhs + ab.conjugate_by(conjugators[i]) * weights[i];
        conjugated_witness = conjugated_witness + witness.conjugate_by(conjugators[i]) * weights[i];
    }
    // Exactly in the group algebra the difference is the conjugated witness
    // combination, and under pi the witness vanishes.
    return lhs - rhs == conjugated_witness && pi_of(lhs - rhs).is_zero() &&
           pi_of(lhs) == pi_of(rhs);
}

}  // namespace tlab
