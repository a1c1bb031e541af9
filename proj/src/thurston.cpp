#include "tlab/thurston.hpp"

#include "tlab/budget.hpp"
#include "tlab/question_mark.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tlab {

namespace {

// 2-adic valuation of a dyadic: value = odd * 2^val2.
long val2(const Dyadic& d) {
    using boost::multiprecision::lsb;
    return static_cast<long>(lsb(d.numerator())) - d.exponent();
}

// Affine fit on [u, v) from exact samples at u and the midpoint, verified at
// the quarter point. Returns nothing when the data is not affine with a
// power-of-2 slope or the image leaves [0, 1].
template <typename Value>
std::optional<Piece> try_fit(const Dyadic& u, const Dyadic& v, Value&& value) {
    Dyadic len = v - u;
    Dyadic x2 = u + len.mul_pow2(-1);
    Dyadic x3 = u + len.mul_pow2(-2);
    Dyadic y1 = value(u), y2 = value(x2), y3 = value(x3);
    Dyadic dy = y2 - y1, dx = x2 - u;
    if (dy <= Dyadic::zero()) return std::nullopt;
    long k = val2(dy) - val2(dx);
    if (k < INT32_MIN || k > INT32_MAX || dx.mul_pow2(static_cast<int>(k)) != dy) return std::nullopt;
    Piece piece{u, static_cast<int>(k), y1 - u.mul_pow2(static_cast<int>(k))};
    if (x3.mul_pow2(piece.slope_exp) + piece.offset != y3) return std::nullopt;
    if (v.mul_pow2(piece.slope_exp) + piece.offset > Dyadic::one()) return std::nullopt;
    return piece;
}

std::vector<Dyadic> grid_points(int depth) {
    std::vector<Dyadic> pts;
    BigInt n = pow2(static_cast<unsigned>(depth));
    for (BigInt k = 0; k < n; ++k) pts.emplace_back(k, depth);
    return pts;
}

int deepest_cut(const std::set<Dyadic>& cuts) {
    int d = 0;
    for (auto& c : cuts) d = std::max(d, c.exponent());
    return d;
}

Dyadic interval_midpoint(const std::set<Dyadic>& cuts, const Dyadic& x) {
    auto it = cuts.upper_bound(x);
    Dyadic hi = it == cuts.end() ? Dyadic::one() : *it;
    Dyadic lo = *std::prev(it);
    return lo + (hi - lo).mul_pow2(-1);
}

}  // namespace

PLMap push_forward(const PPSLMap& g, const IsoOptions& opt) {
    auto value = [&](const Dyadic& x) { return phi_circle(g(phi_circle_inv(x))); };

    std::set<Dyadic> cuts{Dyadic::zero()};
    for (auto& bp : g.breakpoints()) cuts.insert(phi_circle(bp));
    const std::size_t budget = capped_budget(opt.piece_budget);

    for (;;) {
        if (cuts.size() > budget)
            throw BudgetExhausted("push_forward: subdivision budget exhausted");

        std::vector<Piece> pieces;
        std::optional<Dyadic> split;
        for (auto it = cuts.begin(); it != cuts.end(); ++it) {
            auto next = std::next(it);
            Dyadic v = next == cuts.end() ? Dyadic::one() : *next;
            auto piece = try_fit(*it, v, value);
            if (!piece) {
                split = *it + (v - *it).mul_pow2(-1);
                break;
            }
            pieces.push_back(*piece);
        }
        if (split) {
            cuts.insert(*split);
            continue;
        }

        std::optional<PLMap> candidate;
        try {
            candidate.emplace(std::move(pieces));
        } catch (const std::invalid_argument&) {
            // A three-sample fit lied somewhere; refine everywhere.
            std::set<Dyadic> finer = cuts;
            for (auto it = cuts.begin(); it != cuts.end(); ++it) {
                auto next = std::next(it);
                Dyadic v = next == cuts.end() ? Dyadic::one() : *next;
                finer.insert(*it + (v - *it).mul_pow2(-1));
            }
            cuts = std::move(finer);
            continue;
        }

        int dv = std::max(opt.verify_depth, deepest_cut(cuts) + 1);
        std::optional<Dyadic> bad;
        for (auto& x : grid_points(dv))
            if ((*candidate)(x) != value(x)) {
                bad = x;
                break;
            }
        if (bad) {
            cuts.insert(interval_midpoint(cuts, *bad));
            continue;
        }
        return *candidate;
    }
}

PPSLMap pull_back(const PLMap& h, const IsoOptions& opt) {
    if (h.classify() == PLMap::Membership::V_minus_T)
        throw std::domain_error("pull_back: input has more than one discontinuity, not in T");

    auto w = [&](const ExtRational& r) { return phi_circle_inv(h(phi_circle(r))); };

    // Cut positions live in the dyadic coordinate; the circle point of a
    // position u is phi^-1(u).
    std::set<Dyadic> cuts{Dyadic::zero()};
    for (auto& bp : h.circle_breakpoints()) cuts.insert(bp);
    const std::size_t budget = capped_budget(opt.piece_budget);

    for (;;) {
        if (cuts.size() > budget) throw BudgetExhausted("pull_back: subdivision budget exhausted");

        std::vector<std::pair<Dyadic, PSL2Z>> fitted;
        std::optional<Dyadic> split;
        for (auto it = cuts.begin(); it != cuts.end(); ++it) {
            auto next = std::next(it);
            Dyadic v = next == cuts.end() ? Dyadic::one() : *next;
            Dyadic len = v - *it;
            ExtRational r1 = phi_circle_inv(*it);
            ExtRational r2 = phi_circle_inv(*it + len.mul_pow2(-1));
            ExtRational r3 = phi_circle_inv(*it + len.mul_pow2(-2));
            TwoPointResult res = solve_two_point(r1, w(r1), r2, w(r2));
            if (res.status != TwoPointStatus::Found || (*res.matrix)(r3) != w(r3)) {
                split = *it + len.mul_pow2(-1);
                break;
            }
            fitted.emplace_back(*it, *res.matrix);
        }
        if (split) {
            cuts.insert(*split);
            continue;
        }

        // Exact verification on a dyadic grid before constructing.
        int dv = std::max(opt.verify_depth, deepest_cut(cuts) + 1);
        std::optional<Dyadic> bad;
        for (auto& x : grid_points(dv)) {
            auto it = std::prev(std::upper_bound(
                fitted.begin(), fitted.end(), x,
                [](const Dyadic& lhs, const std::pair<Dyadic, PSL2Z>& p) { return lhs < p.first; }));
            ExtRational r = phi_circle_inv(x);
            if (it->second(r) != w(r)) {
                bad = x;
                break;
            }
        }
        if (bad) {
            cuts.insert(interval_midpoint(cuts, *bad));
            continue;
        }

        std::optional<PPSLMap> candidate;
        try {
            std::vector<Arc> arcs;
            for (auto& [u, m] : fitted) arcs.push_back(Arc{phi_circle_inv(u), m});
            candidate.emplace(std::move(arcs));
        } catch (const std::invalid_argument&) {
            candidate.reset();
        }
        if (!candidate || push_forward(*candidate, opt) != h) {
            std::set<Dyadic> finer = cuts;
            for (auto it = cuts.begin(); it != cuts.end(); ++it) {
                auto next = std::next(it);
                Dyadic v = next == cuts.end() ? Dyadic::one() : *next;
                finer.insert(*it + (v - *it).mul_pow2(-1));
            }
            cuts = std::move(finer);
            continue;
        }
        return *candidate;
    }
}

std::optional<PSL2Z> lambda_membership(const PLMap& h, const IsoOptions& opt) {
    PPSLMap g = pull_back(h, opt);
    if (!g.breakpoints().empty()) return std::nullopt;
    return g.arcs()[0].matrix;
}

const PLMap& lambda_gen_x() {
    static const PLMap x = compose(generator(GeneratorName::D), generator(GeneratorName::D));
    return x;
}

const PLMap& lambda_gen_y() {
    static const PLMap y = generator(GeneratorName::C);
    return y;
}

bool reduced_word_nontrivial(const std::vector<LambdaSyllable>& word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        const auto& s = word[i];
        if (s.letter != 'x' && s.letter != 'y')
            throw std::invalid_argument("reduced_word_nontrivial: letters are 'x' and 'y'");
        if (s.letter == 'x' && s.exponent != 1)
            throw std::invalid_argument("reduced_word_nontrivial: non-reduced x power");
        if (s.letter == 'y' && s.exponent != 1 && s.exponent != 2 && s.exponent != -1)
            throw std::invalid_argument("reduced_word_nontrivial: non-reduced y power");
        if (i > 0 && word[i - 1].letter == s.letter)
            throw std::invalid_argument("reduced_word_nontrivial: adjacent equal letters");
    }
    PLMap acc = PLMap::identity();
    for (auto& s : word) {
        const PLMap& base = s.letter == 'x' ? lambda_gen_x() : lambda_gen_y();
        int reps = s.letter == 'x' ? 1 : (s.exponent == -1 ? 2 : s.exponent);
        for (int i = 0; i < reps; ++i) acc = compose(acc, base);
    }
    return !acc.is_identity();
}

namespace {

// Sorts circle points by their phi position, i.e. in circle order from 0.
std::vector<ExtRational> sort_by_circle_position(std::vector<ExtRational> pts) {
    std::sort(pts.begin(), pts.end(), [](const ExtRational& a, const ExtRational& b) {
        return phi_circle(a) < phi_circle(b);
    });
    return pts;
}

}  // namespace

CentralizerReport centralizer_in_lambda(const PLMap& f, int word_bound, const IsoOptions& opt) {
    if (f.is_identity())
        throw std::invalid_argument("centralizer_in_lambda: input must not be the identity");

    CentralizerReport report;
    std::ostringstream cert;

    if (f.classify() != PLMap::Membership::V_minus_T) {
        PPSLMap ft = pull_back(f, opt);
        if (ft.breakpoints().empty()) {
            // f in Lambda: the centralizer is cyclic; classify by trace and
            // list the commuting elements of a ball in Lambda.
            report.kind = CentralizerReport::Case::InLambda;
            const PSL2Z m = ft.arcs()[0].matrix;
            report.classification = m.classify_trace() == PSL2Z::TraceClass::Elliptic
                                        ? CentralizerReport::CyclicClass::FiniteCyclic
                                        : CentralizerReport::CyclicClass::InfiniteCyclic;
            for (auto& g : ball_enumerate({lambda_gen_x(), lambda_gen_y()}, word_bound))
                if (compose(g, f) == compose(f, g)) report.elements.push_back(g);
            report.complete = false;
            cert << "matrix " << m.str() << " trace-classified; commuting elements of the "
                 << "{D^2, C} ball of radius " << word_bound << " listed (completeness not claimed)";
            report.certificate = cert.str();
            return report;
        }

        // f in T \ Lambda: any commuting element of Lambda permutes the
        // breakpoints of pull_back(f) and is pinned by its values on two of
        // them.
        report.kind = CentralizerReport::Case::InTMinusLambda;
        std::vector<ExtRational> bps = sort_by_circle_position(ft.breakpoints());
        if (bps.size() < 2)
            throw std::logic_error("centralizer_in_lambda: element outside PSL(2,Z) needs >= 2 breakpoints");
        bool unknown = false;
        std::set<PLMap> elements;
        for (std::size_t i = 0; i < bps.size(); ++i)
            for (std::size_t j = 0; j < bps.size(); ++j) {
                if (i == j) continue;
                TwoPointResult res = solve_two_point(bps[0], bps[i], bps[1], bps[j]);
                if (res.status == TwoPointStatus::Unknown) {
                    unknown = true;
                    continue;
                }
                if (res.status != TwoPointStatus::Found) continue;
                PPSLMap candidate = PPSLMap::single(*res.matrix);
                if (compose(candidate, ft) == compose(ft, candidate))
                    elements.insert(push_forward(candidate, opt));
            }
        report.elements.assign(elements.begin(), elements.end());
        report.complete = !unknown;
        cert << "breakpoint permutation search over " << bps.size()
             << " breakpoints of the pulled-back element, base pair (" << bps[0].str() << ", "
             << bps[1].str() << "); " << (unknown ? "incomplete: solver budget exhausted"
                                                  : "complete by two-point determination");
        report.certificate = cert.str();
        return report;
    }

    // f in V \ T: same scheme on the circle discontinuity points, with the
    // two-point data pulled through phi^-1.
    report.kind = CentralizerReport::Case::InVMinusT;
    std::vector<Dyadic> discs = f.circle_discontinuities();
    if (discs.size() < 2)
        throw std::logic_error("centralizer_in_lambda: discontinuous bijection needs >= 2 discontinuities");
    std::vector<ExtRational> pts;
    for (auto& x : discs) pts.push_back(phi_circle_inv(x));
    bool unknown = false;
    std::set<PLMap> elements;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            TwoPointResult res = solve_two_point(pts[0], pts[i], pts[1], pts[j]);
            if (res.status == TwoPointStatus::Unknown) {
                unknown = true;
                continue;
            }
            if (res.status != TwoPointStatus::Found) continue;
            PLMap candidate = push_forward(PPSLMap::single(*res.matrix), opt);
            if (compose(candidate, f) == compose(f, candidate)) elements.insert(candidate);
        }
    report.elements.assign(elements.begin(), elements.end());
    report.complete = !unknown;
    cert << "discontinuity permutation search over " << discs.size()
         << " circle discontinuities at dyadic positions, base pair (" << discs[0].str() << ", "
         << discs[1].str() << "); " << (unknown ? "incomplete: solver budget exhausted"
                                                : "complete by two-dyadic-point determination");
    report.certificate = cert.str();
    return report;
}

}  // namespace tlab
