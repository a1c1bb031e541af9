#include "tlab/plmap.hpp"

#include "tlab/budget.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tlab {

namespace {

Dyadic apply_piece(const Piece& p, const Dyadic& x) {
    return x.mul_pow2(p.slope_exp) + p.offset;
}

}  // namespace

PLMap::PLMap(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("PLMap: empty piece list");
    if (!pieces_.front().src_start.is_zero()) throw std::invalid_argument("PLMap: first piece must start at 0");
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i - 1].src_start >= pieces_[i].src_start)
            throw std::invalid_argument("PLMap: src starts must be strictly increasing");
    if (pieces_.back().src_start >= Dyadic::one())
        throw std::invalid_argument("PLMap: src starts must lie in [0, 1)");

    // Canonical form: merge adjacent pieces with equal slope and offset.
    std::vector<Piece> merged;
    for (auto& p : pieces_) {
        if (!merged.empty() && merged.back().slope_exp == p.slope_exp && merged.back().offset == p.offset)
            continue;
        merged.push_back(p);
    }
    pieces_ = std::move(merged);

    // Bijectivity: the half-open image intervals must partition [0, 1).
    std::vector<std::pair<Dyadic, Dyadic>> images;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        Dyadic end = i + 1 < pieces_.size() ? pieces_[i + 1].src_start : Dyadic::one();
        Dyadic img_lo = apply_piece(pieces_[i], pieces_[i].src_start);
        Dyadic img_hi = apply_piece(pieces_[i], end);
        if (img_lo < Dyadic::zero() || img_hi > Dyadic::one())
            throw std::invalid_argument("PLMap: piece image leaves [0, 1)");
        images.emplace_back(img_lo, img_hi);
    }
    std::sort(images.begin(), images.end());
    Dyadic expect = Dyadic::zero();
    for (auto& [lo, hi] : images) {
        if (lo != expect) throw std::invalid_argument("PLMap: piece images do not partition [0, 1)");
        expect = hi;
    }
    if (expect != Dyadic::one()) throw std::invalid_argument("PLMap: piece images do not partition [0, 1)");
}

bool PLMap::is_identity() const {
    return pieces_.size() == 1 && pieces_[0].slope_exp == 0 && pieces_[0].offset.is_zero();
}

const Piece& PLMap::piece_at(const Dyadic& x) const {
    if (x < Dyadic::zero() || Dyadic::one() <= x) throw std::domain_error("PLMap: point outside [0, 1)");
    std::size_t lo = 0;
    for (std::size_t i = 1; i < pieces_.size() && pieces_[i].src_start <= x; ++i) lo = i;
    return pieces_[lo];
}

Dyadic PLMap::operator()(const Dyadic& x) const { return apply_piece(piece_at(x), x); }

PLMap PLMap::inverse() const {
    std::vector<Piece> inv;
    inv.reserve(pieces_.size());
    for (auto& p : pieces_) {
        Dyadic img_lo = apply_piece(p, p.src_start);
        inv.push_back(Piece{img_lo, -p.slope_exp, (-p.offset).mul_pow2(-p.slope_exp)});
    }
    std::sort(inv.begin(), inv.end(),
              [](const Piece& a, const Piece& b) { return a.src_start < b.src_start; });
    return PLMap(std::move(inv));
}

PLMap compose(const PLMap& f, const PLMap& g) {
    PLMap g_inv = g.inverse();
    std::set<Dyadic> cuts;
    for (auto& p : g.pieces()) cuts.insert(p.src_start);
    for (auto& p : f.pieces()) cuts.insert(g_inv(p.src_start));
    std::vector<Piece> pieces;
    for (auto& u : cuts) {
        const Piece& pg = g.piece_at(u);
        Dyadic gu = apply_piece(pg, u);
        const Piece& pf = f.piece_at(gu);
        int k = pf.slope_exp + pg.slope_exp;
        pieces.push_back(Piece{u, k, apply_piece(pf, gu) - u.mul_pow2(k)});
    }
    return PLMap(std::move(pieces));
}

PLMap::Membership PLMap::classify() const {
    int interval_discs = 0;
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        Dyadic left = apply_piece(pieces_[i - 1], pieces_[i].src_start);
        Dyadic value = apply_piece(pieces_[i], pieces_[i].src_start);
        if (left != value) ++interval_discs;
    }
    if (interval_discs == 0) {
        if (!limit_at_zero().is_zero())
            throw std::logic_error("PLMap: continuous non-homeomorphism should be impossible");
        return Membership::F;
    }
    if (interval_discs == 1) {
        // T per the discontinuity count; the circle-homeomorphism property
        // is a theorem for bijections and is asserted here.
        if (!circle_discontinuities().empty())
            throw std::logic_error("PLMap: one interval discontinuity but not a circle homeomorphism");
        return Membership::T_minus_F;
    }
    return Membership::V_minus_T;
}

std::vector<Dyadic> PLMap::circle_discontinuities() const {
    std::vector<Dyadic> discs;
    if (limit_at_one().mod1() != limit_at_zero()) discs.push_back(Dyadic::zero());
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        Dyadic left = apply_piece(pieces_[i - 1], pieces_[i].src_start);
        Dyadic value = apply_piece(pieces_[i], pieces_[i].src_start);
        if (left.mod1() != value) discs.push_back(pieces_[i].src_start);
    }
    return discs;
}

std::vector<Dyadic> PLMap::circle_breakpoints() const {
    std::vector<Dyadic> bps;
    // Wrap point: the last piece must continue the first one mod 1.
    if (pieces_.back().slope_exp != pieces_.front().slope_exp ||
        limit_at_one().mod1() != limit_at_zero())
        bps.push_back(Dyadic::zero());
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        Dyadic left = apply_piece(pieces_[i - 1], pieces_[i].src_start);
        Dyadic value = apply_piece(pieces_[i], pieces_[i].src_start);
        if (pieces_[i - 1].slope_exp != pieces_[i].slope_exp || left.mod1() != value)
            bps.push_back(pieces_[i].src_start);
    }
    return bps;
}

Dyadic PLMap::limit_at_one() const { return apply_piece(pieces_.back(), Dyadic::one()); }

namespace {

struct GeneratorTables {
    PLMap d, c, pi0, a, b;

    GeneratorTables()
        : d({Piece{Dyadic::zero(), 0, Dyadic(3, 2)}, Piece{Dyadic(1, 2), 0, -Dyadic(1, 2)}}),
          c({Piece{Dyadic::zero(), -1, Dyadic(3, 2)}, Piece{Dyadic::half(), 1, -Dyadic::one()},
             Piece{Dyadic(3, 2), 0, -Dyadic(1, 2)}}),
          pi0({Piece{Dyadic::zero(), -1, Dyadic::half()}, Piece{Dyadic::half(), 1, -Dyadic::one()},
               Piece{Dyadic(3, 2), 0, Dyadic::zero()}}),
          a(compose(compose(d, d), compose(c, c))),
          b(compose(compose(c, c), compose(d, a))) {}
};

}  // namespace

const PLMap& generator(GeneratorName name) {
    static const GeneratorTables tables;
    switch (name) {
        case GeneratorName::A: return tables.a;
        case GeneratorName::B: return tables.b;
        case GeneratorName::C: return tables.c;
        case GeneratorName::D: return tables.d;
        case GeneratorName::Pi0: return tables.pi0;
    }
    throw std::invalid_argument("generator: unknown name");
}

PLMap rescale_upper(const PLMap& g) {
    std::vector<Piece> pieces;
    pieces.push_back(Piece{Dyadic::zero(), 0, Dyadic::zero()});
    for (auto& p : g.pieces()) {
        Dyadic src = p.src_start.mul_pow2(-1) + Dyadic::half();
        Dyadic off = p.offset.mul_pow2(-1) + Dyadic::half() - Dyadic(1, 0).mul_pow2(p.slope_exp - 1);
        pieces.push_back(Piece{src, p.slope_exp, off});
    }
    return PLMap(std::move(pieces));
}

std::vector<PLMap> ball_enumerate(const std::vector<PLMap>& gens, int radius) {
    if (radius < 0) throw std::invalid_argument("ball_enumerate: negative radius");
    std::set<PLMap> letters;
    for (auto& g : gens) {
        letters.insert(g);
        letters.insert(g.inverse());
    }
    const std::size_t cap = global_budget_cap();
    std::set<PLMap> seen;
    seen.insert(PLMap::identity());
    std::vector<PLMap> frontier(seen.begin(), seen.end());
    for (int r = 0; r < radius && !frontier.empty(); ++r) {
        std::vector<PLMap> next;
        for (auto& f : frontier)
            for (auto& letter : letters) {
                PLMap h = compose(letter, f);
                if (seen.insert(h).second) next.push_back(h);
                if (seen.size() > cap) throw BudgetExhausted("ball_enumerate: ball exceeds budget");
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

GroupWord::GroupWord(std::vector<Syllable> syllables) {
    for (auto& s : syllables) {
        if (!syllables_.empty() && syllables_.back().symbol == s.symbol) {
            syllables_.back().exponent += s.exponent;
            if (syllables_.back().exponent == 0) syllables_.pop_back();
        } else if (s.exponent != 0) {
            syllables_.push_back(s);
        }
    }
}

std::string GroupWord::str() const {
    if (syllables_.empty()) return "e";
    std::string out;
    for (auto& s : syllables_) {
        if (!out.empty()) out += ' ';
        out += s.symbol;
        if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
    return out;
}

GroupWord GroupWord::parse(const std::string& text) {
    std::vector<Syllable> syllables;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token == "e") continue;
        auto caret = token.find('^');
        Syllable s;
        if (caret == std::string::npos) {
            s.symbol = token;
        } else {
            s.symbol = token.substr(0, caret);
            try {
                s.exponent = std::stoll(token.substr(caret + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("GroupWord: bad exponent in token '" + token + "'");
            }
        }
        if (s.symbol.empty()) throw std::invalid_argument("GroupWord: empty symbol");
        syllables.push_back(s);
    }
    return GroupWord(std::move(syllables));
}

namespace {

PLMap resolve_symbol(const std::string& symbol) {
    if (symbol == "A") return generator(GeneratorName::A);
    if (symbol == "B") return generator(GeneratorName::B);
    if (symbol == "C") return generator(GeneratorName::C);
    if (symbol == "D") return generator(GeneratorName::D);
    if (symbol == "pi0" || symbol == "π₀") return generator(GeneratorName::Pi0);
    if (symbol == "a") return word_to_element(GroupWord::parse("C D C"));
    if (symbol == "b") return word_to_element(GroupWord::parse("D^2 C D C D^2"));
    if (symbol == "e") return PLMap::identity();
    throw std::invalid_argument("word_to_element: unknown symbol '" + symbol + "'");
}

PLMap power(const PLMap& g, long long e) {
    PLMap base = e < 0 ? g.inverse() : g;
    long long n = e < 0 ? -e : e;
    PLMap acc = PLMap::identity();
    for (long long i = 0; i < n; ++i) acc = compose(acc, base);
    return acc;
}

}  // namespace

PLMap word_to_element(const GroupWord& word) {
    PLMap acc = PLMap::identity();
    for (auto& s : word.syllables()) acc = compose(acc, power(resolve_symbol(s.symbol), s.exponent));
    return acc;
}

Dyadic address_start(const std::string& address) {
    Dyadic lo = Dyadic::zero();
    int depth = 0;
    for (char c : address) {
        ++depth;
        if (c == '2')
            lo = lo + Dyadic(1, depth);
        else if (c != '1')
            throw std::invalid_argument("address_start: addresses use digits '1' and '2'");
    }
    return lo;
}

namespace {

// Address of [m 2^-n, (m+1) 2^-n) given the interval start and depth n.
std::string address_of(const Dyadic& start, int n) {
    BigInt m = start.numerator() * pow2(static_cast<unsigned>(n - start.exponent()));
    std::string addr(static_cast<std::size_t>(n), '1');
    for (int bit = 0; bit < n; ++bit)
        if (boost::multiprecision::bit_test(m, bit)) addr[static_cast<std::size_t>(n - 1 - bit)] = '2';
    return addr;
}

}  // namespace

TreePair tree_pair(const PLMap& f) {
    TreePair leaves;
    const auto& pieces = f.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        Dyadic end = i + 1 < pieces.size() ? pieces[i + 1].src_start : Dyadic::one();
        Dyadic cur = pieces[i].src_start;
        int k = pieces[i].slope_exp;
        while (cur < end) {
            Dyadic y = apply_piece(pieces[i], cur);
            // Coarsest standard dyadic interval at cur whose image is again
            // standard dyadic: greedy choice yields the minimal subdivision.
            int n = std::max({cur.exponent(), k + y.exponent(), k, 0});
            while (cur + Dyadic(1, n) > end) ++n;
            leaves.push_back(LeafPair{address_of(cur, n), address_of(y, n - k)});
            cur = cur + Dyadic(1, n);
        }
    }
    return leaves;
}

PLMap from_tree_pair(const TreePair& leaves) {
    std::vector<Piece> pieces;
    for (auto& leaf : leaves) {
        Dyadic src = address_start(leaf.src);
        Dyadic dst = address_start(leaf.dst);
        int k = static_cast<int>(leaf.src.size()) - static_cast<int>(leaf.dst.size());
        pieces.push_back(Piece{src, k, dst - src.mul_pow2(k)});
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.src_start < b.src_start; });
    return PLMap(std::move(pieces));
}

}  // namespace tlab
