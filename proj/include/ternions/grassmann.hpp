#pragma once

// Plücker embedding of 3-dimensional subspaces of F^6 into the
// 20-dimensional exterior cube.

#include <array>
#include <ostream>
#include <string>

#include "ternions/exactfield.hpp"
#include "ternions/tmodule.hpp"

namespace ternions {

/// Triple (i, j, k) with 1 <= i < j < k <= 6. Positions 0..19 enumerate the
/// triples lexicographically:
///
///   0:123  1:124  2:125  3:126  4:134  5:135  6:136  7:145  8:146  9:156
///  10:234 11:235 12:236 13:245 14:246 15:256 16:345 17:346 18:356 19:456
class TripleIndex {
 public:
  static constexpr std::size_t kCount = 20;

  /// Throws UsageError unless 1 <= i < j < k <= 6.
  TripleIndex(int i, int j, int k);
  static TripleIndex from_position(std::size_t position);

  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }
  int k() const noexcept { return k_; }
  std::size_t position() const noexcept;

  /// "135" etc.
  std::string to_string() const;

  friend bool operator==(const TripleIndex&, const TripleIndex&) = default;

 private:
  int i_, j_, k_;
};

/// Coordinates p_ijk in lexicographic triple order.
class PluckerVector {
 public:
  explicit PluckerVector(const FieldSpec& field) : coords_(filled<20>(Scalar::zero(field))) {}
  explicit PluckerVector(std::array<Scalar, 20> coords) : coords_(std::move(coords)) {}

  const FieldSpec& field() const noexcept { return coords_[0].field(); }

  Scalar& operator[](const TripleIndex& t) { return coords_[t.position()]; }
  const Scalar& operator[](const TripleIndex& t) const { return coords_[t.position()]; }
  /// p_ijk by the digits of the triple, e.g. at(1, 3, 5).
  const Scalar& at(int i, int j, int k) const { return (*this)[TripleIndex(i, j, k)]; }
  Scalar& at(int i, int j, int k) { return (*this)[TripleIndex(i, j, k)]; }

  const std::array<Scalar, 20>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;

  friend PluckerVector operator+(const PluckerVector& x, const PluckerVector& y);
  friend PluckerVector operator*(const Scalar& s, const PluckerVector& x);

  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
  friend auto operator<=>(const PluckerVector&, const PluckerVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const PluckerVector& v);

 private:
  std::array<Scalar, 20> coords_;
};

/// p_ijk = det of columns i, j, k of the 3x6 matrix whose rows are `rows`,
/// taken in the given order. Throws RankError if the rows are dependent.
PluckerVector plucker(const std::array<Vector6, 3>& rows);
/// Plücker vector of the RREF basis. Throws RankError unless dim = 3.
PluckerVector plucker(const Subspace3& sub);

/// q = lambda p for some nonzero lambda. Throws UsageError on a zero input.
bool projective_eq(const PluckerVector& p, const PluckerVector& q);

/// The multiple whose first nonzero coordinate is 1. Throws UsageError on
/// the zero vector.
PluckerVector normalize(const PluckerVector& p);

/// Unit vector e_ijk.
PluckerVector basepoint(const FieldSpec& field, int i, int j, int k);

}  // namespace ternions
