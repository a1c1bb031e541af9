#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace tlab {

// Arbitrary-precision integers and rationals. Stern-Brocot descents and
// repeated compositions grow numerators fast enough that fixed-width
// integers are not an option.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^k for k >= 0.
inline BigInt pow2(unsigned k) {
    BigInt r = 1;
    return r << k;
}

// Floor division with sign convention floor(a/b), b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

// Deterministic 64-bit mixer used wherever the numerics need a seeded
// pseudo-random stream (power-iteration start vectors, sampled words).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in {0, ..., n-1}.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }
};

}  // namespace tlab
