#pragma once

// The left T-module T^2: pairs, cyclic submodules as subspaces of F^6,
// freeness and unimodularity, and the right action of GL_2(T).

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "ternions/ternion.hpp"

namespace ternions {

/// An element (A, B) of T^2.
struct TernionPair {
  Ternion a;
  Ternion b;

  static TernionPair zero(const FieldSpec& f);
  /// Generator (I, 0) of the X-orbit representative.
  static TernionPair x0(const FieldSpec& f);
  /// Generator (E22, E12) of the Y-orbit representative.
  static TernionPair y0(const FieldSpec& f);

  const FieldSpec& field() const noexcept { return a.field(); }

  friend TernionPair operator+(const TernionPair& p, const TernionPair& q) {
    return {p.a + q.a, p.b + q.b};
  }
  /// Left scalar multiplication t.(A, B) = (tA, tB).
  friend TernionPair operator*(const Ternion& t, const TernionPair& p) {
    return {t * p.a, t * p.b};
  }

  friend bool operator==(const TernionPair&, const TernionPair&) = default;
  friend auto operator<=>(const TernionPair&, const TernionPair&) = default;

  friend std::ostream& operator<<(std::ostream& os, const TernionPair& p) {
    return os << '[' << p.a << ", " << p.b << ']';
  }
};

/// Coordinates (a11, b11, a22, b22, a12, b12) of a pair.
using Vector6 = std::array<Scalar, 6>;

Vector6 embed_pair(const TernionPair& pair);
/// Inverse of embed_pair.
TernionPair unembed_pair(const Vector6& v);

/// A subspace of F^6 of dimension at most 3, stored as its reduced
/// row-echelon basis. The RREF basis is unique, so equality and ordering of
/// Subspace3 values are equality and ordering of subspaces.
class Subspace3 {
 public:
  /// Row span of `vectors`. Throws RankError if the span exceeds dimension 3.
  static Subspace3 span(std::span<const Vector6> vectors);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector6>& basis() const noexcept { return basis_; }
  bool contains(const Vector6& v) const;

  friend bool operator==(const Subspace3&, const Subspace3&) = default;
  friend auto operator<=>(const Subspace3&, const Subspace3&) = default;

 private:
  std::vector<Vector6> basis_;
};

/// 2x2 matrix over T acting on row vectors from the right.
struct TernionMatrix2 {
  Ternion s11, s12, s21, s22;

  static TernionMatrix2 identity(const FieldSpec& f);

  friend TernionMatrix2 operator*(const TernionMatrix2& x, const TernionMatrix2& y) {
    return {x.s11 * y.s11 + x.s12 * y.s21, x.s11 * y.s12 + x.s12 * y.s22,
            x.s21 * y.s11 + x.s22 * y.s21, x.s21 * y.s12 + x.s22 * y.s22};
  }
  friend bool operator==(const TernionMatrix2&, const TernionMatrix2&) = default;
};

/// The cyclic submodule T.(A, B) as an F-subspace of F^6.
///
/// t -> t.(A, B) is F-linear and {E11, E12, E22} is an F-basis of T, so the
/// three images E11.(A,B), E12.(A,B), E22.(A,B) span the whole submodule.
Subspace3 cyclic_submodule(const TernionPair& pair);

/// The submodule has F-dimension 3, i.e. t -> t.(A, B) is injective.
bool is_free(const TernionPair& pair);

/// (a11, b11) != (0, 0) and (a22, b22) != (0, 0); equivalent to the
/// existence of C, D with AC + BD = I.
bool is_unimodular(const TernionPair& pair);

enum class PairClass { X, Y, NonFree };

struct Classification {
  PairClass kind;
  std::size_t dim;  // F-dimension of the submodule
  /// For Y: a22 d22 - b22 c22 with (c22, d22) = (a12, b12) of the generator.
  std::optional<Scalar> y_determinant;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// X: free and unimodular. Y: free, not unimodular. NonFree otherwise.
Classification classify(const TernionPair& pair);

const char* to_string(PairClass c) noexcept;
/// "X", "Y" or "NonFree(d)".
std::string to_string(const Classification& c);

/// Invertible iff both diagonal projections (the 2x2 F-matrices of (1,1)
/// and of (2,2) entries) have nonzero determinant.
bool mat_is_invertible(const TernionMatrix2& s);

/// (A, B).S = (A S11 + B S21, A S12 + B S22).
TernionPair act(const TernionPair& pair, const TernionMatrix2& s);

enum class ClassFilter { X, Y, Both };

/// Number of pairs in T^2 over a finite field, p^6.
std::uint64_t pair_count(const FieldSpec& spec);

/// Pair with base-p digits of `index` as (a11, a12, a22, b11, b12, b22),
/// most significant first.
TernionPair pair_from_index(const FieldSpec& spec, std::uint64_t index);

/// Distinct free cyclic submodules of the requested class, sorted.
std::vector<Subspace3> enumerate_free_submodules(const FieldSpec& spec, ClassFilter filter,
                                                 unsigned workers = 1);

}  // namespace ternions
