#include "tlab/psl2z.hpp"

#include <set>
#include <stdexcept>

namespace tlab {

PSL2Z::PSL2Z(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) throw std::invalid_argument("PSL2Z: determinant must be 1");
    if (c_ < 0 || (c_ == 0 && d_ < 0)) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

ExtRational PSL2Z::operator()(const ExtRational& x) const {
    const ExtRational cx = x.circle();
    return ExtRational(a_ * cx.num() + b_ * cx.den(), c_ * cx.num() + d_ * cx.den()).circle();
}

PSL2Z::TraceClass PSL2Z::classify_trace() const {
    if (is_identity()) return TraceClass::Identity;
    BigInt tr = a_ + d_;
    if (tr < 0) tr = -tr;
    if (tr < 2) return TraceClass::Elliptic;
    if (tr == 2) return TraceClass::Parabolic;
    return TraceClass::Hyperbolic;
}

std::string PSL2Z::str() const {
    return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

std::optional<PSL2Z> PSL2Z::parse(const std::string& text) {
    BigInt entries[4];
    std::size_t pos = 0;
    int idx = 0;
    auto skip = [&](char c) {
        if (pos >= text.size() || text[pos] != c) return false;
        ++pos;
        return true;
    };
    if (!skip('[') || !skip('[')) return std::nullopt;
    for (int row = 0; row < 2; ++row) {
        for (int col = 0; col < 2; ++col) {
            std::size_t start = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) return std::nullopt;
            entries[idx++] = BigInt(text.substr(start, pos - start));
            if (col == 0 && !skip(',')) return std::nullopt;
        }
        if (!skip(']')) return std::nullopt;
        if (row == 0 && (!skip(',') || !skip('['))) return std::nullopt;
    }
    if (!skip(']') || pos != text.size()) return std::nullopt;
    try {
        return PSL2Z(entries[0], entries[1], entries[2], entries[3]);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

TwoPointResult solve_two_point(const ExtRational& x1, const ExtRational& y1,
                               const ExtRational& x2, const ExtRational& y2,
                               const BigInt& divisor_budget) {
    const ExtRational p1 = x1.circle(), p2 = x2.circle(), q1 = y1.circle(), q2 = y2.circle();
    if (p1 == p2 || q1 == q2) throw std::invalid_argument("solve_two_point: points must be distinct");

    // An integral matrix maps the primitive vector of x_i to t_i times the
    // primitive vector of y_i for a nonzero integer t_i, and the determinant
    // condition pins t1 t2 = X/Y where X, Y are the input cross products.
    // Enumerating divisors of X/Y therefore decides the problem.
    const BigInt X = p1.num() * p2.den() - p2.num() * p1.den();
    const BigInt Y = q1.num() * q2.den() - q2.num() * q1.den();
    if (X % Y != 0) return {TwoPointStatus::None, std::nullopt};
    const BigInt n = X / Y;
    BigInt n_abs = n < 0 ? BigInt(-n) : n;

    std::set<PSL2Z> found;
    BigInt d = 1;
    for (; d * d <= n_abs; ++d) {
        if (d > divisor_budget) return {TwoPointStatus::Unknown, std::nullopt};
        if (n_abs % d != 0) continue;
        for (const BigInt& t1 : {BigInt(d), BigInt(n_abs / d)}) {
            BigInt t2 = n / t1;
            // Candidate X * M, to be checked for divisibility by X.
            BigInt m[4] = {t1 * q1.num() * p2.den() - t2 * q2.num() * p1.den(),
                           -t1 * q1.num() * p2.num() + t2 * q2.num() * p1.num(),
                           t1 * q1.den() * p2.den() - t2 * q2.den() * p1.den(),
                           -t1 * q1.den() * p2.num() + t2 * q2.den() * p1.num()};
            bool integral = true;
            for (auto& e : m) integral = integral && e % X == 0;
            if (!integral) continue;
            found.insert(PSL2Z(m[0] / X, m[1] / X, m[2] / X, m[3] / X));
        }
    }
    if (found.empty()) return {TwoPointStatus::None, std::nullopt};
    if (found.size() > 1) throw std::logic_error("solve_two_point: interpolation must be unique");
    return {TwoPointStatus::Found, *found.begin()};
}

}  // namespace tlab
