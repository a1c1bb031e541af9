#pragma once

#include "tlab/dyadic.hpp"
#include "tlab/numeric.hpp"
#include "tlab/plmap.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tlab {

// Finite rational-coefficient sums of Cuntz monomials s_mu s_nu^* in the
// O_2 generated by the two isometries
//
//     s1 d_x = d_{x/2},   s2 d_x = d_{(1+x)/2}      on l^2(Z[1/2] n [0,1)),
//
// with s1^* s1 = s2^* s2 = 1 and s1 s1^* + s2 s2^* = 1. Words mu, nu are
// over the digits {1,2} addressing standard dyadic intervals (1 = left
// half). Normal form: every nu is expanded to the common length
// K = max |nu| via s_mu s_nu^* = sum_w s_{mu w} s_{nu w}^*; monomials at a
// fixed level are linearly independent, so equality of sums is equality of
// the leveled coefficient maps.
class CuntzWordSum {
public:
    using Word = std::string;  // digits '1' and '2'
    using Key = std::pair<Word, Word>;  // (mu, nu)

    CuntzWordSum() = default;  // zero

    static CuntzWordSum zero() { return {}; }
    static CuntzWordSum one() { return monomial("", ""); }
    static CuntzWordSum monomial(Word mu, Word nu, Rational coeff = 1);
    static CuntzWordSum s1() { return monomial("1", ""); }
    static CuntzWordSum s2() { return monomial("2", ""); }
    static CuntzWordSum s1_star() { return monomial("", "1"); }
    static CuntzWordSum s2_star() { return monomial("", "2"); }

    bool is_zero() const { return terms_.empty(); }
    int level() const { return level_; }
    const std::map<Key, Rational>& terms() const { return terms_; }

    CuntzWordSum operator+(const CuntzWordSum& o) const;
    CuntzWordSum operator-(const CuntzWordSum& o) const;
    CuntzWordSum operator*(const CuntzWordSum& o) const;
    CuntzWordSum operator*(const Rational& scalar) const;
    CuntzWordSum operator-() const { return *this * Rational(-1); }

    CuntzWordSum adjoint() const;

    // The automorphism of O_2 interchanging s1 and s2: digits of both word
    // components relabelled.
    CuntzWordSum swap_generators() const;

    // Equality of operators: expand to a common level, compare maps.
    bool operator==(const CuntzWordSum& o) const;

    // Collapse sum_{w} s_{mu w} s_{nu w}^* back to s_mu s_nu^* wherever all
    // children carry the same coefficient; used for display.
    std::vector<std::pair<Key, Rational>> reduced_terms() const;

    // Text form as in "1/2 s1 s2* + 1 s2 s1*" with a middle dot separator.
    std::string str() const;

private:
    void add_term(const Key& key, const Rational& coeff);
    void set_level(int level);
    static void level_terms(std::map<Key, Rational>& terms, int level);

    int level_ = 0;
    std::map<Key, Rational> terms_;
};

// Exact finite combination of basis vectors d_x.
using BasisVector = std::map<Dyadic, Rational>;

// Image of d_x under the sum, exactly.
BasisVector apply_to_basis(const CuntzWordSum& u, const Dyadic& x);

// The representation pi(g) d_x = d_{g(x)} of V inside O_2: the sum of
// s_dst s_src^* over the tree pair of g.
CuntzWordSum pi_of(const PLMap& g);

// States: phi0 is the vector state at d_0, picking the coefficients of
// all-1s monomials; phi1 = phi0 after the swap automorphism.
Rational state_phi0(const CuntzWordSum& u);
Rational state_phi1(const CuntzWordSum& u);

// pi(e) + pi(a o b) - pi(a) - pi(b) with a = CDC and b = D^2 C D C D^2.
// Normalizes to zero; a nonzero result throws.
CuntzWordSum kernel_witness();

// Checks s1 = pi(A) s1 s1^* + pi(D^2 o A^-1) s2 s2^* symbolically.
bool s1_decomposition_check();

// The same identity with the composite read as A^-1 o D^2 instead
// (convention oracle; expected to fail).
bool s1_decomposition_variant_check();

// s2 = pi(D^2) s1.
bool s2_from_s1_check();

}  // namespace tlab
