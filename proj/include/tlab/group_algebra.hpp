#pragma once

#include "tlab/cuntz.hpp"
#include "tlab/numeric.hpp"
#include "tlab/plmap.hpp"

#include <map>

namespace tlab {

// Formal rational-coefficient sum over group elements of V (canonical
// PLMaps); multiplication is convolution through exact composition.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;  // zero

    static GroupAlgebraElement zero() { return {}; }
    static GroupAlgebraElement lambda(const PLMap& g, Rational coeff = 1);
    static GroupAlgebraElement one() { return lambda(PLMap::identity()); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<PLMap, Rational>& terms() const { return terms_; }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
    GroupAlgebraElement operator*(const Rational& scalar) const;
    GroupAlgebraElement operator-() const { return *this * Rational(-1); }

    // lambda(g) |-> lambda(g^-1) with conjugated (real) coefficients.
    GroupAlgebraElement adjoint() const;

    // lambda(h) x lambda(h)^* = the sum over conjugated support.
    GroupAlgebraElement conjugate_by(const PLMap& h) const;

    bool nonnegative() const;

    bool operator==(const GroupAlgebraElement& o) const { return terms_ == o.terms_; }

private:
    void add_term(const PLMap& g, const Rational& coeff);

    std::map<PLMap, Rational> terms_;
};

// Linear extension of the Nekrashevych representation to the group algebra.
CuntzWordSum pi_of(const GroupAlgebraElement& x);

}  // namespace tlab
