#pragma once

#include "tlab/dyadic.hpp"

#include <compare>
#include <string>
#include <vector>

namespace tlab {

// One affine piece of an element of Thompson's group V:
// x |-> 2^slope_exp * x + offset on [src_start, next src_start).
struct Piece {
    Dyadic src_start;
    int slope_exp = 0;
    Dyadic offset;

    auto operator<=>(const Piece&) const = default;
};

// Right-continuous piecewise-linear bijection of [0, 1) with dyadic
// breakpoints and power-of-2 slopes, in canonical form (adjacent pieces with
// equal slope and offset merged). Equality of group elements is equality of
// canonical forms. Immutable value type.
class PLMap {
public:
    // Canonicalizes and validates: strictly increasing src starts from 0,
    // image intervals inside [0, 1) partitioning it. Throws on invalid data.
    explicit PLMap(std::vector<Piece> pieces);

    static PLMap identity() { return PLMap({Piece{Dyadic::zero(), 0, Dyadic::zero()}}); }

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_identity() const;

    // Exact image of a point of [0, 1).
    Dyadic operator()(const Dyadic& x) const;

    PLMap inverse() const;

    enum class Membership { F, T_minus_F, V_minus_T };
    Membership classify() const;

    // Points of [0, 1), including the wrap point 0, where the left circle
    // limit differs from the value mod 1.
    std::vector<Dyadic> circle_discontinuities() const;

    // Breakpoints as a circle map: interior canonical piece starts plus 0
    // when the last piece does not continue the first one across the wrap.
    std::vector<Dyadic> circle_breakpoints() const;

    Dyadic limit_at_zero() const { return pieces_.front().offset; }
    Dyadic limit_at_one() const;  // left limit at 1, a dyadic of (0, 1]

    const Piece& piece_at(const Dyadic& x) const;

    std::strong_ordering operator<=>(const PLMap& o) const { return pieces_ <=> o.pieces_; }
    bool operator==(const PLMap& o) const { return pieces_ == o.pieces_; }

private:
    std::vector<Piece> pieces_;
};

// Standard right-to-left composition: compose(f, g) = f o g, g acts first.
PLMap compose(const PLMap& f, const PLMap& g);

enum class GeneratorName { A, B, C, D, Pi0 };

// The fixed generator tables: D from its defining formula, C and pi0 decoded
// from their images in the Cuntz algebra, A = D^2 o C^2, B = C^2 o D o A.
const PLMap& generator(GeneratorName name);

// Conjugate of g by the affine identification [0,1) ~ [1/2,1); the result
// fixes [0, 1/2) pointwise.
PLMap rescale_upper(const PLMap& g);

// All distinct elements expressible as words of length <= radius in
// gens u inverses, sorted in canonical order.
std::vector<PLMap> ball_enumerate(const std::vector<PLMap>& gens, int radius);

// --- Group words ------------------------------------------------------

struct Syllable {
    std::string symbol;
    long long exponent = 1;

    bool operator==(const Syllable&) const = default;
};

// Word in the symbols {A, B, C, D, pi0} plus the named constants
// {a = CDC, b = D^2 C D C D^2, e}. Canonical: adjacent equal symbols merged,
// zero exponents dropped.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Syllable> syllables);

    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool empty() const { return syllables_.empty(); }

    std::string str() const;
    // Whitespace-separated "SYM" or "SYM^k" tokens; "e" or "" is the
    // empty word.
    static GroupWord parse(const std::string& text);

    bool operator==(const GroupWord&) const = default;

private:
    std::vector<Syllable> syllables_;
};

// Right-to-left evaluation: "C D C" gives C o D o C. Throws on unknown
// symbols.
PLMap word_to_element(const GroupWord& word);

// --- Tree pairs -------------------------------------------------------

// Addresses are words over {'1','2'}: '1' = left half, '2' = right half.
// The empty address is the root leaf [0, 1).
struct LeafPair {
    std::string src;
    std::string dst;

    bool operator==(const LeafPair&) const = default;
};

using TreePair = std::vector<LeafPair>;

// Minimal subdivision of [0,1) into standard dyadic intervals, each mapped
// affinely onto a standard dyadic interval; ordered by source address.
TreePair tree_pair(const PLMap& f);

// Rebuild the map from a tree pair (round-trip companion of tree_pair).
PLMap from_tree_pair(const TreePair& leaves);

// Interval [lo, lo + 2^-n) of a leaf address.
Dyadic address_start(const std::string& address);

}  // namespace tlab
