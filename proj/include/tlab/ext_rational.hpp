#pragma once

#include "tlab/dyadic.hpp"
#include "tlab/numeric.hpp"

#include <compare>
#include <optional>
#include <string>

namespace tlab {

// Reduced fraction p/q with q >= 0 and (p, q) != (0, 0).
//
// The two infinities are encoded projectively as -1/0 and 1/0. On the line
// [-inf, inf] they are distinct endpoints; on the circle R u {inf} they are
// the single point inf, obtained with circle().
class ExtRational {
public:
    ExtRational() : num_(0), den_(1) {}
    ExtRational(BigInt num, BigInt den);

    static ExtRational infinity() { return ExtRational(1, 0); }
    static ExtRational neg_infinity() { return ExtRational(-1, 0); }
    static ExtRational from_integer(BigInt n) { return ExtRational(std::move(n), 1); }
    static ExtRational from_dyadic(const Dyadic& d) {
        return ExtRational(d.numerator(), pow2(static_cast<unsigned>(d.exponent())));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }
    bool is_pos_infinity() const { return den_ == 0 && num_ > 0; }
    bool is_neg_infinity() const { return den_ == 0 && num_ < 0; }

    // Collapses -1/0 to 1/0; identity on finite points.
    ExtRational circle() const { return is_infinite() ? infinity() : *this; }

    bool operator==(const ExtRational& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Line order on [-inf, inf].
    std::strong_ordering operator<=>(const ExtRational& o) const;

    Rational to_rational() const;  // finite points only

    // Text form "p/q" (or "inf"/"-inf"); parse also accepts a bare integer.
    std::string str() const;
    static std::optional<ExtRational> parse(const std::string& text);

private:
    BigInt num_;
    BigInt den_;
};

// |ps - rq| for x = p/q, y = r/s.
BigInt farey_determinant(const ExtRational& x, const ExtRational& y);

// True iff x and y are consecutive Farey numbers, |ps - rq| = 1.
bool farey_consecutive(const ExtRational& x, const ExtRational& y);

// (p+r)/(q+s); requires Farey-consecutive inputs (then automatically reduced).
ExtRational mediant(const ExtRational& x, const ExtRational& y);

// True iff y lies on the positively oriented circle arc from x to z.
// All three points must be distinct points of R u {inf}.
bool cyclic_order(const ExtRational& x, const ExtRational& y, const ExtRational& z);

}  // namespace tlab
