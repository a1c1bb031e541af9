#include "tlab/dyadic.hpp"
#include "tlab/ext_rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace tlab {

std::string Dyadic::str() const {
    return num_.str() + "/2^" + std::to_string(exp_);
}

std::optional<Dyadic> Dyadic::parse(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Dyadic(BigInt(text), 0);
        if (text.compare(slash, 3, "/2^") != 0) return std::nullopt;
        BigInt num(text.substr(0, slash));
        int exp = std::stoi(text.substr(slash + 3));
        if (exp < 0) return std::nullopt;
        return Dyadic(num, exp);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

ExtRational::ExtRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ == 0 && den_ == 0) throw std::invalid_argument("ExtRational: 0/0");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(den_ == 0 ? boost::multiprecision::abs(num_) : num_, den_);
    if (g < 0) g = -g;
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (den_ == 0) num_ = num_ > 0 ? 1 : -1;
}

std::strong_ordering ExtRational::operator<=>(const ExtRational& o) const {
    auto side = [](const ExtRational& x) { return x.is_neg_infinity() ? -1 : (x.is_pos_infinity() ? 1 : 0); };
    int a = side(*this), b = side(o);
    if (a != 0 || b != 0) {
        if (a < b) return std::strong_ordering::less;
        if (a > b) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    BigInt lhs = num_ * o.den_, rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational ExtRational::to_rational() const {
    if (is_infinite()) throw std::domain_error("ExtRational: infinite point has no Rational value");
    return Rational(num_, den_);
}

std::string ExtRational::str() const {
    if (is_pos_infinity()) return "inf";
    if (is_neg_infinity()) return "-inf";
    return num_.str() + "/" + den_.str();
}

std::optional<ExtRational> ExtRational::parse(const std::string& text) {
    if (text == "inf") return infinity();
    if (text == "-inf") return neg_infinity();
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return from_integer(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (num == 0 && den == 0) return std::nullopt;
        return ExtRational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

BigInt farey_determinant(const ExtRational& x, const ExtRational& y) {
    BigInt d = x.num() * y.den() - y.num() * x.den();
    return d < 0 ? BigInt(-d) : d;
}

bool farey_consecutive(const ExtRational& x, const ExtRational& y) {
    return farey_determinant(x, y) == 1;
}

ExtRational mediant(const ExtRational& x, const ExtRational& y) {
    if (!farey_consecutive(x, y))
        throw std::invalid_argument("mediant: " + x.str() + ", " + y.str() + " are not consecutive Farey numbers");
    return ExtRational(x.num() + y.num(), x.den() + y.den());
}

bool cyclic_order(const ExtRational& x, const ExtRational& y, const ExtRational& z) {
    ExtRational cx = x.circle(), cy = y.circle(), cz = z.circle();
    if (cx == cy || cy == cz || cx == cz)
        throw std::invalid_argument("cyclic_order: points must be distinct");
    // Line order with inf as the maximum; the positive orientation of the
    // circle runs through increasing reals and wraps through inf.
    auto less = [](const ExtRational& u, const ExtRational& v) {
        if (u.is_infinite()) return false;
        if (v.is_infinite()) return true;
        return u < v;
    };
    if (less(cx, cz)) return less(cx, cy) && less(cy, cz);
    return less(cx, cy) || less(cy, cz);
}

}  // namespace tlab
