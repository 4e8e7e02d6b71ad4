#include "ternions/json_io.hpp"

namespace ternions::json_io {

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Ternion& t) {
  return {{"a11", to_json(t.a11)}, {"a12", to_json(t.a12)}, {"a22", to_json(t.a22)}};
}

json to_json(const TernionPair& p) { return {{"A", to_json(p.a)}, {"B", to_json(p.b)}}; }

json to_json(const Subspace3& s) {
  json basis = json::array();
  for (const auto& row : s.basis()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    basis.push_back(std::move(r));
  }
  return {{"dim", s.dim()}, {"basis", std::move(basis)}};
}

json to_json(const PluckerVector& p) {
  json out = json::array();
  for (const auto& x : p.coords()) out.push_back(to_json(x));
  return out;
}

json to_json(const RestrictedPoint& p) {
  json out = json::object();
  for (std::size_t n = 0; n < 8; ++n) out[kRestrictedNames[n]] = to_json(p[n]);
  return out;
}

json to_json(const XParams& xp) {
  return {{"a11", to_json(xp.a11)}, {"b11", to_json(xp.b11)}, {"a22", to_json(xp.a22)},
          {"b22", to_json(xp.b22)}, {"a12", to_json(xp.a12)}, {"b12", to_json(xp.b12)}};
}

json to_json(const YParams& yp) {
  return {{"a22", to_json(yp.a22)}, {"b22", to_json(yp.b22)}, {"c22", to_json(yp.c22)},
          {"d22", to_json(yp.d22)}};
}

json to_json(const Params& params) {
  if (const auto* xp = std::get_if<XParams>(&params)) {
    return {{"kind", "X"}, {"params", to_json(*xp)}};
  }
  return {{"kind", "Y"}, {"params", to_json(std::get<YParams>(params))}};
}

Scalar scalar_from_json(const FieldSpec& field, const json& j) {
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(field, j.get<std::int64_t>());
  throw ParseError("expected a scalar (string or integer), got " + j.dump());
}

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\" in " + j.dump());
  }
  return j.at(key);
}

}  // namespace

Ternion ternion_from_json(const FieldSpec& field, const json& j) {
  return {scalar_from_json(field, member(j, "a11")), scalar_from_json(field, member(j, "a12")),
          scalar_from_json(field, member(j, "a22"))};
}

TernionPair pair_from_json(const FieldSpec& field, const json& j) {
  return {ternion_from_json(field, member(j, "A")), ternion_from_json(field, member(j, "B"))};
}

std::array<Vector6, 3> rows_from_json(const FieldSpec& field, const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected a 3x6 matrix");
  std::array<Vector6, 3> rows = {filled<6>(Scalar::zero(field)), filled<6>(Scalar::zero(field)),
                                 filled<6>(Scalar::zero(field))};
  for (std::size_t r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 6) throw ParseError("expected a 3x6 matrix");
    for (std::size_t c = 0; c < 6; ++c) rows[r][c] = scalar_from_json(field, j[r][c]);
  }
  return rows;
}

RestrictedPoint restricted_from_json(const FieldSpec& field, const json& j) {
  RestrictedPoint out = RestrictedPoint::zero(field);
  for (std::size_t n = 0; n < 8; ++n) out[n] = scalar_from_json(field, member(j, kRestrictedNames[n]));
  return out;
}

}  // namespace ternions::json_io
