#include "tlab/text_io.hpp"

#include <sstream>

namespace tlab {

namespace {

Dyadic dyadic_from_text(const std::string& text) {
    auto d = Dyadic::parse(text);
    if (!d) throw ParseError("bad dyadic '" + text + "'");
    return *d;
}

}  // namespace

nlohmann::json plmap_to_json(const PLMap& f) {
    nlohmann::json pieces = nlohmann::json::array();
    for (auto& p : f.pieces())
        pieces.push_back({{"src", p.src_start.str()},
                          {"slope_exp", p.slope_exp},
                          {"offset", p.offset.str()}});
    return {{"pieces", pieces}};
}

PLMap plmap_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
        throw ParseError("PLMap JSON needs a 'pieces' array");
    std::vector<Piece> pieces;
    for (auto& p : j["pieces"]) {
        if (!p.contains("src") || !p.contains("slope_exp") || !p.contains("offset"))
            throw ParseError("PLMap piece needs src, slope_exp, offset");
        pieces.push_back(Piece{dyadic_from_text(p["src"].get<std::string>()),
                               p["slope_exp"].get<int>(),
                               dyadic_from_text(p["offset"].get<std::string>())});
    }
    try {
        return PLMap(std::move(pieces));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json ppsl_to_json(const PPSLMap& g) {
    nlohmann::json arcs = nlohmann::json::array();
    for (auto& arc : g.arcs())
        arcs.push_back({{"from", arc.from.str()},
                        {"matrix",
                         {{arc.matrix.a().str(), arc.matrix.b().str()},
                          {arc.matrix.c().str(), arc.matrix.d().str()}}}});
    return {{"arcs", arcs}};
}

PPSLMap ppsl_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("arcs") || !j["arcs"].is_array() || j["arcs"].empty())
        throw ParseError("PPSLMap JSON needs a nonempty 'arcs' array");
    std::vector<Arc> arcs;
    for (auto& a : j["arcs"]) {
        if (!a.contains("from") || !a.contains("matrix")) throw ParseError("arc needs from, matrix");
        auto from = ExtRational::parse(a["from"].get<std::string>());
        if (!from) throw ParseError("bad arc endpoint '" + a["from"].get<std::string>() + "'");
        const auto& m = a["matrix"];
        if (!m.is_array() || m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
            throw ParseError("matrix must be [[a,b],[c,d]]");
        auto entry = [&](int r, int c) {
            const auto& cell = m[r][c];
            if (cell.is_number_integer()) return BigInt(cell.get<long long>());
            return BigInt(cell.get<std::string>());
        };
        try {
            arcs.push_back(Arc{*from, PSL2Z(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))});
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    try {
        return PPSLMap(std::move(arcs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json cuntz_to_json(const CuntzWordSum& u) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [key, coeff] : u.terms())
        terms.push_back({{"coeff", coeff.str()}, {"mu", key.first}, {"nu", key.second}});
    return {{"terms", terms}};
}

CuntzWordSum cuntz_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("CuntzWordSum JSON needs a 'terms' array");
    CuntzWordSum out;
    for (auto& t : j["terms"]) {
        if (!t.contains("mu") || !t.contains("nu") || !t.contains("coeff"))
            throw ParseError("Cuntz term needs mu, nu, coeff");
        out = out + CuntzWordSum::monomial(t["mu"].get<std::string>(), t["nu"].get<std::string>(),
                                           rational_from_text(t["coeff"].get<std::string>()));
    }
    return out;
}

Rational rational_from_text(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + text + "'");
    }
}

CuntzWordSum cuntz_from_text(const std::string& text) {
    // Sum of signed terms; a term is an optional coefficient (with optional
    // dot) followed by a monomial: unstarred letters then starred letters.
    CuntzWordSum out;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) != 0))
            ++pos;
    };
    auto fail = [&](const std::string& what) {
        throw ParseError("Cuntz sum: " + what + " at position " + std::to_string(pos));
    };
    skip_space();
    if (pos == text.size()) fail("empty input");
    bool first = true;
    while (pos < text.size()) {
        skip_space();
        Rational sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_space();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;

        // Optional coefficient: digits (with optional /q), then optional dot.
        Rational coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                ++pos;
            std::string token = text.substr(start, pos - start);
            skip_space();
            // A bare "1" not followed by a dot or letters is the identity
            // monomial, not a coefficient.
            bool at_term = pos < text.size() && (text.compare(pos, 2, "·") == 0 || text[pos] == 's');
            if (at_term) {
                coeff = rational_from_text(token);
                if (text.compare(pos, 2, "·") == 0) {
                    pos += 2;
                    skip_space();
                }
            } else {
                if (token != "1") fail("scalar term must be written as a coefficient of '1'");
                out = out + CuntzWordSum::one() * sign;
                skip_space();
                continue;
            }
        }

        // Monomial letters.
        std::string mu, nu_reversed;
        bool starred_phase = false;
        bool any = false;
        for (;;) {
            skip_space();
            if (pos + 1 >= text.size() || text[pos] != 's') break;
            char digit = text[pos + 1];
            if (digit != '1' && digit != '2') fail("generator must be s1 or s2");
            pos += 2;
            bool star = pos < text.size() && text[pos] == '*';
            if (star) ++pos;
            if (star) {
                starred_phase = true;
                nu_reversed += digit;
            } else {
                if (starred_phase) fail("unstarred generator after adjoints");
                mu += digit;
            }
            any = true;
        }
        if (!any) {
            if (pos < text.size() && text[pos] == '1') {
                ++pos;
            } else {
                fail("expected a monomial");
            }
        }
        out = out + CuntzWordSum::monomial(mu, std::string(nu_reversed.rbegin(), nu_reversed.rend()),
                                           coeff) *
                        sign;
        skip_space();
    }
    return out;
}

nlohmann::json algebra_to_json(const GroupAlgebraElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [g, c] : x.terms())
        terms.push_back({{"coeff", c.str()}, {"element", plmap_to_json(g)}});
    return {{"terms", terms}};
}

GroupAlgebraElement algebra_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("group algebra JSON needs a 'terms' array");
    GroupAlgebraElement out;
    for (auto& t : j["terms"]) {
        if (!t.contains("coeff")) throw ParseError("algebra term needs a coeff");
        Rational c = rational_from_text(t["coeff"].get<std::string>());
        if (t.contains("word"))
            out = out + GroupAlgebraElement::lambda(
                            word_to_element(GroupWord::parse(t["word"].get<std::string>())), c);
        else if (t.contains("element"))
            out = out + GroupAlgebraElement::lambda(plmap_from_json(t["element"]), c);
        else
            throw ParseError("algebra term needs a word or an element");
    }
    return out;
}

ParsedElement parse_element(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input");
    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
        if (j.contains("pieces")) return plmap_from_json(j);
        if (j.contains("terms")) return cuntz_from_json(j);
        throw ParseError("JSON object is neither a PLMap nor a Cuntz sum");
    }
    if (text.compare(first, 2, "[[") == 0) {
        auto m = PSL2Z::parse(text.substr(first));
        if (!m) throw ParseError("bad matrix '" + text + "'");
        return *m;
    }
    if (text.find("s1") != std::string::npos || text.find("s2") != std::string::npos)
        return cuntz_from_text(text);
    try {
        return GroupWord::parse(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace tlab
