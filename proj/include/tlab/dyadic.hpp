#pragma once

#include "tlab/numeric.hpp"

#include <compare>
#include <optional>
#include <string>

namespace tlab {

// Dyadic rational p / 2^n.
//
// Canonical form: n == 0, or p odd. All arithmetic stays exact; the class is
// an immutable value type.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(BigInt numerator, int exponent) : num_(std::move(numerator)), exp_(exponent) {
        normalize();
    }
    static Dyadic from_integer(BigInt n) { return Dyadic(std::move(n), 0); }
    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1, 0); }
    static Dyadic half() { return Dyadic(1, 1); }

    const BigInt& numerator() const { return num_; }
    int exponent() const { return exp_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    Dyadic operator+(const Dyadic& o) const {
        int e = std::max(exp_, o.exp_);
        return Dyadic(num_ * pow2(static_cast<unsigned>(e - exp_)) +
                          o.num_ * pow2(static_cast<unsigned>(e - o.exp_)),
                      e);
    }
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    Dyadic operator*(const Dyadic& o) const { return Dyadic(num_ * o.num_, exp_ + o.exp_); }

    // Multiply by 2^k, k of either sign.
    Dyadic mul_pow2(int k) const {
        if (k >= exp_) return Dyadic(num_ * pow2(static_cast<unsigned>(k - exp_)), 0);
        return Dyadic(num_, exp_ - k);
    }

    BigInt floor() const { return floor_div(num_, pow2(static_cast<unsigned>(exp_))); }

    // Representative in [0, 1).
    Dyadic mod1() const { return *this - Dyadic(floor(), 0); }

    Rational to_rational() const {
        return Rational(num_, pow2(static_cast<unsigned>(exp_)));
    }

    std::strong_ordering operator<=>(const Dyadic& o) const {
        int e = std::max(exp_, o.exp_);
        BigInt lhs = num_ * pow2(static_cast<unsigned>(e - exp_));
        BigInt rhs = o.num_ * pow2(static_cast<unsigned>(e - o.exp_));
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const Dyadic& o) const { return exp_ == o.exp_ && num_ == o.num_; }

    // Text form "p/2^n", bit-exact round trip with parse().
    std::string str() const;
    static std::optional<Dyadic> parse(const std::string& text);

private:
    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    BigInt num_;
    int exp_;  // >= 0
};

}  // namespace tlab
