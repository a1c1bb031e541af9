#include "tlab/group_algebra.hpp"

namespace tlab {

GroupAlgebraElement GroupAlgebraElement::lambda(const PLMap& g, Rational coeff) {
    GroupAlgebraElement x;
    if (coeff != 0) x.terms_.emplace(g, std::move(coeff));
    return x;
}

void GroupAlgebraElement::add_term(const PLMap& g, const Rational& coeff) {
    auto [it, inserted] = terms_.try_emplace(g, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    GroupAlgebraElement out = *this;
    for (auto& [g, c] : o.terms_) out.add_term(g, c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    return *this + (-o);
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    GroupAlgebraElement out;
    for (auto& [g, cg] : terms_)
        for (auto& [h, ch] : o.terms_) out.add_term(compose(g, h), Rational(cg * ch));
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rational& scalar) const {
    GroupAlgebraElement out;
    if (scalar == 0) return out;
    for (auto& [g, c] : terms_) out.terms_.emplace(g, Rational(c * scalar));
    return out;
}

GroupAlgebraElement GroupAlgebraElement::adjoint() const {
    GroupAlgebraElement out;
    for (auto& [g, c] : terms_) out.add_term(g.inverse(), c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::conjugate_by(const PLMap& h) const {
    GroupAlgebraElement out;
    PLMap h_inv = h.inverse();
    for (auto& [g, c] : terms_) out.add_term(compose(h, compose(g, h_inv)), c);
    return out;
}

bool GroupAlgebraElement::nonnegative() const {
    for (auto& [g, c] : terms_)
        if (c < 0) return false;
    return true;
}

CuntzWordSum pi_of(const GroupAlgebraElement& x) {
    CuntzWordSum out;
    for (auto& [g, c] : x.terms()) out = out + pi_of(g) * c;
    return out;
}

}  // namespace tlab
