#pragma once

#include "tlab/ext_rational.hpp"
#include "tlab/numeric.hpp"

#include <compare>
#include <optional>
#include <string>

namespace tlab {

// Element of PSL(2,Z) = SL(2,Z)/{+-1}. The representative is normalized so
// that c > 0, or c = 0 and d > 0.
class PSL2Z {
public:
    PSL2Z() : a_(1), b_(0), c_(0), d_(1) {}
    PSL2Z(BigInt a, BigInt b, BigInt c, BigInt d);

    // a = [0,-1;1,0] and b = [0,-1;1,1], the free-product generators of
    // orders 2 and 3.
    static PSL2Z gen_a() { return PSL2Z(0, -1, 1, 0); }
    static PSL2Z gen_b() { return PSL2Z(0, -1, 1, 1); }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }

    bool is_identity() const { return b_ == 0 && c_ == 0; }

    PSL2Z operator*(const PSL2Z& o) const {
        return PSL2Z(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                     c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
    }
    PSL2Z inverse() const { return PSL2Z(d_, -b_, -c_, a_); }

    // Moebius action on the circle Q u {inf}, exact and projective.
    ExtRational operator()(const ExtRational& x) const;

    enum class TraceClass { Identity, Elliptic, Parabolic, Hyperbolic };
    TraceClass classify_trace() const;

    bool operator==(const PSL2Z& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    std::strong_ordering operator<=>(const PSL2Z& o) const {
        auto cmp = [](const BigInt& x, const BigInt& y) {
            return x < y ? std::strong_ordering::less
                         : (x > y ? std::strong_ordering::greater : std::strong_ordering::equal);
        };
        if (auto c = cmp(a_, o.a_); c != 0) return c;
        if (auto c = cmp(b_, o.b_); c != 0) return c;
        if (auto c = cmp(c_, o.c_); c != 0) return c;
        return cmp(d_, o.d_);
    }

    // Text form "[[a,b],[c,d]]".
    std::string str() const;
    static std::optional<PSL2Z> parse(const std::string& text);

private:
    BigInt a_, b_, c_, d_;
};

// Outcome of the two-point interpolation problem m(x1) = y1, m(x2) = y2.
// Found and None are proven; Unknown is reported only when the divisor
// search exceeds its budget.
enum class TwoPointStatus { Found, None, Unknown };

struct TwoPointResult {
    TwoPointStatus status = TwoPointStatus::None;
    std::optional<PSL2Z> matrix;
};

// The unique element of PSL(2,Z) mapping x1 -> y1 and x2 -> y2, if any.
// Inputs are circle points with x1 != x2 and y1 != y2.
TwoPointResult solve_two_point(const ExtRational& x1, const ExtRational& y1,
                               const ExtRational& x2, const ExtRational& y2,
                               const BigInt& divisor_budget = BigInt(10000000));

}  // namespace tlab
