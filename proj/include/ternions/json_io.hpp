#pragma once

// JSON forms of the domain types. Scalars are always strings in their
// canonical text form ("3", "-1/2"); integers are accepted on input.
//
//   ternion          {"a11": s, "a12": s, "a22": s}
//   pair             {"A": ternion, "B": ternion}
//   subspace         {"dim": d, "basis": [[s x 6], ...]}
//   Plücker vector   [s x 20], lexicographic triple order (see TripleIndex)
//   restricted point {"p135": s, ..., "p456": s}

#include <json.hpp>

#include "ternions/variety.hpp"

namespace ternions::json_io {

using nlohmann::json;

json to_json(const Scalar& s);
json to_json(const Ternion& t);
json to_json(const TernionPair& p);
json to_json(const Subspace3& s);
json to_json(const PluckerVector& p);
json to_json(const RestrictedPoint& p);
json to_json(const XParams& xp);
json to_json(const YParams& yp);
json to_json(const Params& params);

/// All parsers throw ParseError on malformed input.
Scalar scalar_from_json(const FieldSpec& field, const json& j);
Ternion ternion_from_json(const FieldSpec& field, const json& j);
TernionPair pair_from_json(const FieldSpec& field, const json& j);
/// A 3x6 array of scalars.
std::array<Vector6, 3> rows_from_json(const FieldSpec& field, const json& j);
RestrictedPoint restricted_from_json(const FieldSpec& field, const json& j);

}  // namespace ternions::json_io
