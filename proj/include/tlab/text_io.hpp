#pragma once

#include "tlab/cuntz.hpp"
#include "tlab/group_algebra.hpp"
#include "tlab/plmap.hpp"
#include "tlab/ppsl.hpp"
#include "tlab/psl2z.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

// Text and JSON forms of every element kind. All round trips are bit-exact
// on canonical output.

namespace tlab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// PLMap JSON: {"pieces":[{"src":"0/2^0","slope_exp":-1,"offset":"3/2^2"},...]}
nlohmann::json plmap_to_json(const PLMap& f);
PLMap plmap_from_json(const nlohmann::json& j);

// PPSLMap JSON: {"arcs":[{"from":"p/q","matrix":[[a,b],[c,d]]},...]}
nlohmann::json ppsl_to_json(const PPSLMap& g);
PPSLMap ppsl_from_json(const nlohmann::json& j);

// CuntzWordSum JSON mirror of the coefficient map:
// {"terms":[{"coeff":"1","mu":"2","nu":"1"},...]}
nlohmann::json cuntz_to_json(const CuntzWordSum& u);
CuntzWordSum cuntz_from_json(const nlohmann::json& j);

// Text form "1/2 <dot> s1 s2* + 1 <dot> s2 s1*"; bare monomials and "1" are
// accepted, the dot separator is optional on input.
CuntzWordSum cuntz_from_text(const std::string& text);

// GroupAlgebraElement JSON: {"terms":[{"coeff":"p/q","word":"C D^2"},...]}
// (words resolve through word_to_element).
nlohmann::json algebra_to_json(const GroupAlgebraElement& x);
GroupAlgebraElement algebra_from_json(const nlohmann::json& j);

Rational rational_from_text(const std::string& text);

// Front-end dispatcher: JSON objects become PLMaps or CuntzWordSums by
// shape, "[[..],[..]]" a matrix, anything mentioning s1/s2 a Cuntz sum, and
// the rest parses as a group word. Throws ParseError with a position hint.
using ParsedElement = std::variant<PLMap, GroupWord, PSL2Z, CuntzWordSum>;
ParsedElement parse_element(const std::string& text);

}  // namespace tlab
