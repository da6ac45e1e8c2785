#pragma once

#include "taut/charclass.hpp"
#include "taut/kappa.hpp"
#include "taut/rational.hpp"
#include "taut/tautmono.hpp"

#include <json.hpp>

namespace taut {

using Json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in int64 and as
// decimal strings otherwise, so round-trips stay bit-exact.
Json int_to_json(const Integer& z);
Integer int_from_json(const Json& j);

Json rat_to_json(const Rational& q);  // [num, den]
Rational rat_from_json(const Json& j);

Json cc_to_json(const CharClassMonomial& c);  // [a0, a1, ..., a_{d-1}]
CharClassMonomial cc_from_json(const Json& j);

// {coeff: [num,den], kappas: [[...]], psis: {point: [...]}, blocks: [[...]]}
Json term_to_json(const TautMonomial& m, const Rational& coeff);
Json class_to_json(const TautClass& a);
TautClass class_from_json(const Json& j);

// [[[factor exps...], num, den], ...] in term order.
Json kappa_poly_to_json(const KappaPolynomial& p);
KappaPolynomial kappa_poly_from_json(const Json& j, const RingParams& params);

}  // namespace taut
