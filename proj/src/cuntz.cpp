#include "tlab/cuntz.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlab {

namespace {

bool valid_word(const CuntzWordSum::Word& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '1' || c == '2'; });
}

}  // namespace

CuntzWordSum CuntzWordSum::monomial(Word mu, Word nu, Rational coeff) {
    if (!valid_word(mu) || !valid_word(nu))
        throw std::invalid_argument("CuntzWordSum: words use digits '1' and '2'");
    CuntzWordSum u;
    if (coeff != 0) {
        u.level_ = static_cast<int>(nu.size());
        u.terms_.emplace(Key(std::move(mu), std::move(nu)), std::move(coeff));
    }
    return u;
}

void CuntzWordSum::level_terms(std::map<Key, Rational>& terms, int level) {
    std::map<Key, Rational> out;
    for (auto& [key, coeff] : terms) {
        int deficit = level - static_cast<int>(key.second.size());
        if (deficit == 0) {
            out[key] += coeff;
            continue;
        }
        // s_mu s_nu^* = sum over all w of length deficit of s_{mu w} s_{nu w}^*.
        for (BigInt mask = 0, end = pow2(static_cast<unsigned>(deficit)); mask < end; ++mask) {
            Word suffix(static_cast<std::size_t>(deficit), '1');
            for (int bit = 0; bit < deficit; ++bit)
                if (boost::multiprecision::bit_test(mask, bit)) suffix[static_cast<std::size_t>(bit)] = '2';
            out[Key(key.first + suffix, key.second + suffix)] += coeff;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    terms = std::move(out);
}

void CuntzWordSum::set_level(int level) {
    if (level < level_) throw std::logic_error("CuntzWordSum: cannot lower level");
    if (level == level_ && !terms_.empty()) return;
    level_terms(terms_, level);
    level_ = terms_.empty() ? 0 : level;
}

void CuntzWordSum::add_term(const Key& key, const Rational& coeff) {
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

CuntzWordSum CuntzWordSum::operator+(const CuntzWordSum& o) const {
    CuntzWordSum lhs = *this, rhs = o;
    int level = std::max(lhs.level_, rhs.level_);
    lhs.set_level(level);
    rhs.set_level(level);
    for (auto& [key, coeff] : rhs.terms_) lhs.add_term(key, coeff);
    if (lhs.terms_.empty()) lhs.level_ = 0;
    return lhs;
}

CuntzWordSum CuntzWordSum::operator-(const CuntzWordSum& o) const { return *this + (-o); }

CuntzWordSum CuntzWordSum::operator*(const Rational& scalar) const {
    CuntzWordSum out;
    if (scalar == 0) return out;
    out.level_ = level_;
    for (auto& [key, coeff] : terms_) out.terms_.emplace(key, Rational(coeff * scalar));
    return out;
}

CuntzWordSum CuntzWordSum::operator*(const CuntzWordSum& o) const {
    // (s_mu s_nu^*)(s_alpha s_beta^*) is s_{mu a} s_beta^* when
    // alpha = nu a, s_mu s_{beta n}^* when nu = alpha n, and zero otherwise.
    CuntzWordSum out;
    int level = 0;
    std::map<Key, Rational> acc;
    for (auto& [lk, lc] : terms_) {
        const Word& nu = lk.second;
        for (auto& [rk, rc] : o.terms_) {
            const Word& alpha = rk.first;
            Key key;
            if (alpha.size() >= nu.size() && alpha.compare(0, nu.size(), nu) == 0) {
                key = Key(lk.first + alpha.substr(nu.size()), rk.second);
            } else if (nu.compare(0, alpha.size(), alpha) == 0) {
                key = Key(lk.first, rk.second + nu.substr(alpha.size()));
            } else {
                continue;
            }
            level = std::max(level, static_cast<int>(key.second.size()));
            Rational prod = lc * rc;
            auto [it, inserted] = acc.try_emplace(key, prod);
            if (!inserted) it->second += prod;
        }
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    level_terms(acc, level);
    out.terms_ = std::move(acc);
    out.level_ = out.terms_.empty() ? 0 : level;
    return out;
}

CuntzWordSum CuntzWordSum::adjoint() const {
    CuntzWordSum out;
    int level = 0;
    std::map<Key, Rational> acc;
    for (auto& [key, coeff] : terms_) {
        acc[Key(key.second, key.first)] += coeff;
        level = std::max(level, static_cast<int>(key.first.size()));
    }
    level_terms(acc, level);
    out.terms_ = std::move(acc);
    out.level_ = out.terms_.empty() ? 0 : level;
    return out;
}

CuntzWordSum CuntzWordSum::swap_generators() const {
    auto flip = [](Word w) {
        for (char& c : w) c = c == '1' ? '2' : '1';
        return w;
    };
    CuntzWordSum out;
    out.level_ = level_;
    for (auto& [key, coeff] : terms_) out.terms_.emplace(Key(flip(key.first), flip(key.second)), coeff);
    return out;
}

bool CuntzWordSum::operator==(const CuntzWordSum& o) const {
    if (level_ == o.level_) return terms_ == o.terms_;
    CuntzWordSum lhs = *this, rhs = o;
    int level = std::max(level_, o.level_);
    lhs.set_level(level);
    rhs.set_level(level);
    return lhs.terms_ == rhs.terms_;
}

std::vector<std::pair<CuntzWordSum::Key, Rational>> CuntzWordSum::reduced_terms() const {
    std::map<Key, Rational> terms = terms_;
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& [key, coeff] : terms) {
            if (key.first.empty() || key.second.empty()) continue;
            if (key.first.back() != key.second.back() || key.first.back() != '1') continue;
            Key base(key.first.substr(0, key.first.size() - 1),
                     key.second.substr(0, key.second.size() - 1));
            Key sibling(base.first + '2', base.second + '2');
            auto sib = terms.find(sibling);
            if (sib == terms.end() || sib->second != coeff) continue;
            Rational c = coeff;
            terms.erase(sibling);
            terms.erase(key);
            terms[base] += c;
            if (terms[base] == 0) terms.erase(base);
            changed = true;
            break;
        }
    }
    // Display order: by source word nu, then mu, matching tree-pair order.
    std::vector<std::pair<Key, Rational>> out(terms.begin(), terms.end());
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return std::tie(l.first.second, l.first.first) < std::tie(r.first.second, r.first.first);
    });
    return out;
}

std::string CuntzWordSum::str() const {
    auto terms = reduced_terms();
    if (terms.empty()) return "0";
    std::string out;
    for (auto& [key, coeff] : terms) {
        Rational c = coeff;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        out += c.str() + " ·";
        if (key.first.empty() && key.second.empty()) {
            out += " 1";
            continue;
        }
        for (char d : key.first) out += std::string(" s") + d;
        for (auto it = key.second.rbegin(); it != key.second.rend(); ++it)
            out += std::string(" s") + *it + "*";
    }
    return out;
}

BasisVector apply_to_basis(const CuntzWordSum& u, const Dyadic& x) {
    if (x < Dyadic::zero() || Dyadic::one() <= x)
        throw std::domain_error("apply_to_basis: point outside [0, 1)");
    BasisVector out;
    for (auto& [key, coeff] : u.terms()) {
        // Peel the source word: d_x survives s_nu^* iff x lies in I_nu.
        Dyadic y = x;
        bool alive = true;
        for (char d : key.second) {
            if (d == '1') {
                if (y < Dyadic::half())
                    y = y.mul_pow2(1);
                else
                    alive = false;
            } else {
                if (y >= Dyadic::half())
                    y = y.mul_pow2(1) - Dyadic::one();
                else
                    alive = false;
            }
            if (!alive) break;
        }
        if (!alive) continue;
        // Then descend into I_mu.
        for (auto it = key.first.rbegin(); it != key.first.rend(); ++it)
            y = *it == '1' ? y.mul_pow2(-1) : (y + Dyadic::one()).mul_pow2(-1);
        out[y] += coeff;
        if (out[y] == 0) out.erase(y);
    }
    return out;
}

CuntzWordSum pi_of(const PLMap& g) {
    CuntzWordSum out;
    for (auto& leaf : tree_pair(g)) out = out + CuntzWordSum::monomial(leaf.dst, leaf.src);
    return out;
}

namespace {

Rational state_all_ones(const CuntzWordSum& u, char digit) {
    Rational total = 0;
    for (auto& [key, coeff] : u.terms()) {
        auto all = [digit](const CuntzWordSum::Word& w) {
            return std::all_of(w.begin(), w.end(), [digit](char c) { return c == digit; });
        };
        if (all(key.first) && all(key.second)) total += coeff;
    }
    return total;
}

}  // namespace

Rational state_phi0(const CuntzWordSum& u) { return state_all_ones(u, '1'); }

Rational state_phi1(const CuntzWordSum& u) { return state_all_ones(u, '2'); }

CuntzWordSum kernel_witness() {
    PLMap a = word_to_element(GroupWord::parse("C D C"));
    PLMap b = word_to_element(GroupWord::parse("D^2 C D C D^2"));
    CuntzWordSum result =
        pi_of(PLMap::identity()) + pi_of(compose(a, b)) - pi_of(a) - pi_of(b);
    if (!result.is_zero())
        throw std::logic_error("kernel_witness: pi(a + b - ab - e) failed to vanish");
    return result;
}

namespace {

CuntzWordSum s1_decomposition(bool d2_after_a_inverse) {
    const PLMap& A = generator(GeneratorName::A);
    const PLMap& D = generator(GeneratorName::D);
    PLMap d2 = compose(D, D);
    PLMap composite = d2_after_a_inverse ? compose(d2, A.inverse()) : compose(A.inverse(), d2);
    CuntzWordSum p1 = CuntzWordSum::s1() * CuntzWordSum::s1_star();
    CuntzWordSum p2 = CuntzWordSum::s2() * CuntzWordSum::s2_star();
    return pi_of(A) * p1 + pi_of(composite) * p2;
}

}  // namespace

bool s1_decomposition_check() { return s1_decomposition(true) == CuntzWordSum::s1(); }

bool s1_decomposition_variant_check() { return s1_decomposition(false) == CuntzWordSum::s1(); }

bool s2_from_s1_check() {
    const PLMap& D = generator(GeneratorName::D);
    return pi_of(compose(D, D)) * CuntzWordSum::s1() == CuntzWordSum::s2();
}

}  // namespace tlab
