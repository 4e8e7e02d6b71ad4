#pragma once

// Exact arithmetic over prime fields F_p and over the rationals.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ternions/errors.hpp"

namespace ternions {

/// The ground field: either F_p for a prime p, or Q.
///
/// Text form is "p:<prime>" or "rational".
class FieldSpec {
 public:
  /// Largest accepted modulus; keeps residue products inside int64.
  static constexpr std::int64_t kMaxPrime = (std::int64_t{1} << 31) - 1;

  static FieldSpec prime(std::int64_t p);
  static FieldSpec rational() { return FieldSpec(); }
  static FieldSpec parse(std::string_view text);

  bool is_prime() const noexcept { return p_ != 0; }
  bool is_rational() const noexcept { return p_ == 0; }
  bool is_finite() const noexcept { return is_prime(); }

  /// p for F_p, 0 for Q.
  std::int64_t modulus() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  explicit FieldSpec(std::int64_t p) : p_(p) {}

  std::int64_t p_ = 0;
};

std::int64_t characteristic(const FieldSpec& spec) noexcept;

bool is_prime_number(std::int64_t n) noexcept;

/// An element of a FieldSpec, always held in canonical form: residues in
/// [0, p), fractions in lowest terms with positive denominator.
class Scalar {
 public:
  /// Integer embedded in the field (reduced mod p for prime fields).
  Scalar(const FieldSpec& field, std::int64_t value);
  /// Rational value; only valid for the rational field.
  Scalar(const FieldSpec& field, mpq_class value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

  /// Decimal residue for F_p ("-1" is accepted and reduced); "n" or "n/d"
  /// for Q.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Canonical residue; prime fields only.
  std::int64_t residue() const;
  /// Canonical fraction; rational field only.
  const mpq_class& rational() const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Multiplicative inverse. Throws DivisionByZero for 0.
  Scalar inverse() const;
  /// Multiplicative inverse, or nullopt for 0.
  std::optional<Scalar> try_inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order: residue order for F_p, numeric order for Q. Elements of
  /// different fields are ordered by field first.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  void check_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<std::int64_t, mpq_class> value_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
Scalar inv(const Scalar& a);

/// All p elements of F_p in residue order. Throws UnsupportedEnumeration
/// for the rationals.
std::vector<Scalar> enumerate_field(const FieldSpec& spec);

/// std::array<Scalar, N> with every entry equal to `value`.
template <std::size_t N>
std::array<Scalar, N> filled(const Scalar& value) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<Scalar, N>{((void)I, value)...};
  }(std::make_index_sequence<N>{});
}

}  // namespace ternions
