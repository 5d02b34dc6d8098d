#pragma once

#include <json.hpp>

#include "jset/eisenstein.hpp"
#include "jset/filtered.hpp"
#include "jset/padic.hpp"
#include "jset/shooting.hpp"

namespace jset {

using json = nlohmann::ordered_json;

// {"kind":"rho_ep","p":3,"e":6} | {"kind":"rho_inf","p":2} |
// {"kind":"abstract","table":[3,5,7],"tail":2}
json shift_to_json(const Shift& s);
Shift shift_from_json(const json& j);

// {"shift":{...},"extended":true,"entries":[[1,2],[4,1]]}
json jumpset_to_json(const JumpSet& js);
JumpSet jumpset_from_json(const json& j);
// Same, with the shift supplied when the document omits it.
JumpSet jumpset_from_json(const json& j, const Shift& fallback);

// {"f":1,"coords":{"1":2,"4":1,"5:2":1},"inf_default":true}
// Key "i" is slot 1 at index i, "i:s" is slot s. With inf_default false every
// unlisted coordinate has valuation 1. Optional "shift" and "extended".
json vector_to_json(const ValuationVector& v);
ValuationVector vector_from_json(const json& j, const Shift& fallback);

// {"p":3,"f":1,"j":0,"n":3,"coeff_vals":{"0":1,"1":1}}
json shape_to_json(const EisensteinShape& s);
EisensteinShape shape_from_json(const json& j);

// Base-ring element: D*f coordinates (index b*f + a for s^a y^b), each a
// little-endian array of base-p digits. Plain integers are accepted on input.
json belem_to_json(const BaseRing& b, const Tower::BElem& a);
Tower::BElem belem_from_json(const BaseRing& b, const json& j);

// {"p":2,"f":1,"j":0,"precision":8,"g":[a_0, ..., a_{n-1}]}, monic of degree n.
json polynomial_to_json(const BaseRing& b, const std::vector<Tower::BElem>& g);
std::vector<Tower::BElem> polynomial_from_json(const BaseRing& b, const json& j);

json polygon_to_json(const Polygon& poly);
json distribution_to_json(const Distribution& d);
std::string rational_string(const Rational& r);

}  // namespace jset
