#include "ternions/ternion.hpp"

namespace ternions {

Ternion Ternion::of(const FieldSpec& f, std::int64_t a11, std::int64_t a12, std::int64_t a22) {
  return {Scalar(f, a11), Scalar(f, a12), Scalar(f, a22)};
}

Ternion Ternion::zero(const FieldSpec& f) { return of(f, 0, 0, 0); }
Ternion Ternion::identity(const FieldSpec& f) { return of(f, 1, 0, 1); }
Ternion Ternion::e11(const FieldSpec& f) { return of(f, 1, 0, 0); }
Ternion Ternion::e12(const FieldSpec& f) { return of(f, 0, 1, 0); }
Ternion Ternion::e22(const FieldSpec& f) { return of(f, 0, 0, 1); }

Ternion Ternion::inverse() const {
  if (!is_unit()) throw NonUnitError("ternion is not a unit (zero diagonal entry)");
  Scalar i11 = a11.inverse();
  Scalar i22 = a22.inverse();
  return {i11, -(a12 * i11 * i22), i22};
}

Ternion tern_add(const Ternion& s, const Ternion& t) { return s + t; }
Ternion tern_neg(const Ternion& t) { return -t; }
Ternion tern_mul(const Ternion& s, const Ternion& t) { return s * t; }
bool tern_is_unit(const Ternion& t) { return t.is_unit(); }
Ternion tern_inv(const Ternion& t) { return t.inverse(); }

Ternion embed_scalar(const Scalar& x) { return {x, Scalar::zero(x.field()), x}; }

SubringClass subring_class(const Ternion& t) {
  SubringClass c;
  c.dual = t.a11 == t.a22;
  c.double_ = t.a12.is_zero();
  c.scalar = c.dual && c.double_;
  c.radical = t.a11.is_zero() && t.a22.is_zero();
  return c;
}

std::vector<Ternion> enumerate_ternions(const FieldSpec& spec) {
  const auto elems = enumerate_field(spec);
  std::vector<Ternion> out;
  out.reserve(elems.size() * elems.size() * elems.size());
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems) out.push_back({x, y, z});
  return out;
}

std::vector<Ternion> enumerate_units(const FieldSpec& spec) {
  std::vector<Ternion> out;
  for (auto& t : enumerate_ternions(spec)) {
    if (t.is_unit()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace ternions
