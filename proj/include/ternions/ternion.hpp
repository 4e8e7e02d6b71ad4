#pragma once

// The ring T of upper-triangular 2x2 matrices over a field.

#include <ostream>
#include <vector>

#include "ternions/exactfield.hpp"

namespace ternions {

/// Upper-triangular matrix
///
///   | a11  a12 |
///   |  0   a22 |
///
/// Triples are always written in the order (a11, a12, a22).
struct Ternion {
  Scalar a11;
  Scalar a12;
  Scalar a22;

  static Ternion zero(const FieldSpec& f);
  static Ternion identity(const FieldSpec& f);
  /// Matrix units E11, E12, E22; an F-basis of T.
  static Ternion e11(const FieldSpec& f);
  static Ternion e12(const FieldSpec& f);
  static Ternion e22(const FieldSpec& f);

  /// Ternion from integer entries (reduced into `f`).
  static Ternion of(const FieldSpec& f, std::int64_t a11, std::int64_t a12, std::int64_t a22);

  const FieldSpec& field() const noexcept { return a11.field(); }

  bool is_zero() const noexcept { return a11.is_zero() && a12.is_zero() && a22.is_zero(); }

  /// a11 != 0 and a22 != 0.
  bool is_unit() const noexcept { return !a11.is_zero() && !a22.is_zero(); }

  /// Two-sided inverse (a11^-1, -a12 a11^-1 a22^-1, a22^-1). Throws
  /// NonUnitError for non-units.
  Ternion inverse() const;

  Ternion operator-() const { return {-a11, -a12, -a22}; }

  friend Ternion operator+(const Ternion& s, const Ternion& t) {
    return {s.a11 + t.a11, s.a12 + t.a12, s.a22 + t.a22};
  }
  friend Ternion operator-(const Ternion& s, const Ternion& t) {
    return {s.a11 - t.a11, s.a12 - t.a12, s.a22 - t.a22};
  }
  /// Matrix product; (s11 t11, s11 t12 + s12 t22, s22 t22).
  friend Ternion operator*(const Ternion& s, const Ternion& t) {
    return {s.a11 * t.a11, s.a11 * t.a12 + s.a12 * t.a22, s.a22 * t.a22};
  }

  friend bool operator==(const Ternion&, const Ternion&) = default;
  friend auto operator<=>(const Ternion&, const Ternion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Ternion& t) {
    return os << '(' << t.a11 << ',' << t.a12 << ',' << t.a22 << ')';
  }
};

Ternion tern_add(const Ternion& s, const Ternion& t);
Ternion tern_neg(const Ternion& t);
Ternion tern_mul(const Ternion& s, const Ternion& t);
bool tern_is_unit(const Ternion& t);
Ternion tern_inv(const Ternion& t);

/// x -> xI, a ring homomorphism onto the center of T.
Ternion embed_scalar(const Scalar& x);

/// Membership in the distinguished subrings and the radical.
struct SubringClass {
  bool scalar = false;   // a11 = a22, a12 = 0
  bool dual = false;     // a11 = a22
  bool double_ = false;  // a12 = 0
  bool radical = false;  // a11 = a22 = 0

  friend bool operator==(const SubringClass&, const SubringClass&) = default;
};

SubringClass subring_class(const Ternion& t);

/// All p^3 ternions over F_p, entries in lexicographic (a11, a12, a22) order.
std::vector<Ternion> enumerate_ternions(const FieldSpec& spec);
/// The (p-1)^2 p units, in the same order.
std::vector<Ternion> enumerate_units(const FieldSpec& spec);

}  // namespace ternions
