#pragma once

// The Grassmann image of all free cyclic submodules of T^2: the union of the
// images of the X-submodules (unimodular points) and of the Y-submodules
// (free non-unimodular points, a single line).
//
// All points live in the 8-dimensional subspace of F^20 where
//
//   p123 = p124 = p125 = p126 = p134 = p156 = p234 = p256 = p345 = p346 = 0,
//   p136 = p145,  p236 = p245,
//
// so they are stored by the eight remaining coordinates.

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "ternions/grassmann.hpp"
#include "ternions/polynomial.hpp"
#include "ternions/tmodule.hpp"

namespace ternions {

/// Coordinate order of RestrictedPoint.
inline constexpr std::array<const char*, 8> kRestrictedNames = {
    "p135", "p136", "p146", "p235", "p236", "p246", "p356", "p456"};

enum RestrictedCoord : std::size_t { P135, P136, P146, P235, P236, P246, P356, P456 };

/// A vector of the 8-dimensional ambient subspace. p145 and p245 are implied
/// equal to p136 and p236.
class RestrictedPoint {
 public:
  explicit RestrictedPoint(std::array<Scalar, 8> coords) : coords_(std::move(coords)) {}
  static RestrictedPoint zero(const FieldSpec& field) {
    return RestrictedPoint(filled<8>(Scalar::zero(field)));
  }
  static RestrictedPoint of(const FieldSpec& field, const std::array<std::int64_t, 8>& values);

  const FieldSpec& field() const noexcept { return coords_[0].field(); }
  const std::array<Scalar, 8>& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t n) const { return coords_.at(n); }
  Scalar& operator[](std::size_t n) { return coords_.at(n); }

  bool is_zero() const noexcept;
  /// p135 .. p246 all zero (only p356, p456 may be nonzero).
  bool segre_block_zero() const noexcept;

  /// The full 20-coordinate vector.
  PluckerVector expand() const;

  friend RestrictedPoint operator+(const RestrictedPoint& x, const RestrictedPoint& y);
  friend RestrictedPoint operator*(const Scalar& s, const RestrictedPoint& x);

  friend bool operator==(const RestrictedPoint&, const RestrictedPoint&) = default;
  friend auto operator<=>(const RestrictedPoint&, const RestrictedPoint&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RestrictedPoint& p);

 private:
  std::array<Scalar, 8> coords_;
};

/// Drops the twelve coordinates fixed by the ambient linear conditions.
/// Throws NotInAmbient naming the first violated condition.
RestrictedPoint restrict_to_ambient(const PluckerVector& p);

/// First nonzero coordinate scaled to 1. Throws UsageError on zero.
RestrictedPoint normalize(const RestrictedPoint& p);
bool projective_eq(const RestrictedPoint& p, const RestrictedPoint& q);

// ---------------------------------------------------------------------------
// Defining quadrics

enum class QuadricGroup { Cones, Segre, Pencil };

const char* to_string(QuadricGroup g) noexcept;

struct Quadric {
  std::string name;  // e.g. "p135*p146-p145^2"
  QuadricGroup group;
  Polynomial polynomial;  // in the eight restricted coordinates
};

using QuadricSystem = std::vector<Quadric>;

/// The nine quadrics: two cones over the conics c1, c2, three Segre
/// equations, four equations of the pencil through the line E356 E456.
const QuadricSystem& standard_quadrics();

struct QuadricResiduals {
  std::array<Scalar, 2> cones;
  std::array<Scalar, 3> segre;
  std::array<Scalar, 4> pencil;

  bool all_zero() const noexcept;
};

QuadricResiduals eval_quadrics(const RestrictedPoint& p);
std::vector<Scalar> eval_system(const QuadricSystem& system, const RestrictedPoint& p);

bool is_on_variety(const RestrictedPoint& p);
bool is_on_variety(const RestrictedPoint& p, const QuadricSystem& system);

// ---------------------------------------------------------------------------
// Parametrizations

/// Parameters of the X-parametrization: the generator
/// ((a11 a12; 0 a22), (b11 b12; 0 b22)).
///
/// Extension: (a11, b11) = (0, 0) is accepted as long as the image is
/// nonzero (a12 b22 - b12 a22 != 0); such tuples land on the Y-line.
struct XParams {
  Scalar a11, b11, a22, b22, a12, b12;

  static XParams of(const FieldSpec& f, std::int64_t a11, std::int64_t b11, std::int64_t a22,
                    std::int64_t b22, std::int64_t a12, std::int64_t b12);

  /// (a11, b11) != (0, 0) != (a22, b22).
  bool is_unimodular() const noexcept;
  /// a12 b22 - b12 a22.
  Scalar twist() const { return a12 * b22 - b12 * a22; }
  TernionPair generator() const { return {{a11, a12, a22}, {b11, b12, b22}}; }

  friend bool operator==(const XParams&, const XParams&) = default;
};

/// Parameters of a Y-submodule generated by ((0 c22; 0 a22), (0 d22; 0 b22)).
struct YParams {
  Scalar a22, b22, c22, d22;

  static YParams of(const FieldSpec& f, std::int64_t a22, std::int64_t b22, std::int64_t c22,
                    std::int64_t d22);

  /// a22 d22 - b22 c22; nonzero for valid parameters.
  Scalar determinant() const { return a22 * d22 - b22 * c22; }
  TernionPair generator() const;

  friend bool operator==(const YParams&, const YParams&) = default;
};

using Params = std::variant<XParams, YParams>;

/// p135 = -a11 a22^2, p136 = -a11 a22 b22, p146 = -a11 b22^2 and likewise
/// with b11 for p2**, p356 = a22 m, p456 = b22 m with m = a12 b22 - b12 a22.
///
/// Extension: non-unimodular tuples are accepted too. With (a11, b11) = 0
/// and m != 0 the image is a point of the Y-line, so one map covers the
/// whole variety for tangent computations.
/// Throws DegenerateParameters if the image is zero.
RestrictedPoint param_x(const XParams& xp);

/// p356 = a22 det, p456 = b22 det. Throws InvalidParameters if det = 0.
RestrictedPoint param_y(const YParams& yp);

RestrictedPoint param(const Params& params);

/// Inverse of the parametrizations. Points with zero Segre block yield
/// YParams with (a22, b22) = (p356, p456) and determinant 1; all other points
/// yield unimodular XParams. The result reproduces `p` exactly under
/// `param`. Throws PreconditionError if `p` is not on the variety.
Params unparametrize(const RestrictedPoint& p);

// ---------------------------------------------------------------------------
// Planes gamma(u, v)

/// q_i(u, v) = u^2 e_i35 + uv (e_i36 + e_i45) + v^2 e_i46, i in {1, 2}.
PluckerVector conic_vector(int i, const Scalar& u, const Scalar& v);
/// r(u, v) = u e356 + v e456.
PluckerVector line_vector(const Scalar& u, const Scalar& v);

struct PlaneGamma {
  Scalar u, v;
  PluckerVector q1, q2, r;

  /// Vector dimension of span{q1, q2, r}.
  std::size_t dimension() const;
  /// The projective points of the plane, normalized and sorted (finite
  /// fields only).
  std::vector<RestrictedPoint> points() const;
};

/// Throws InvalidParameters for (u, v) = (0, 0).
PlaneGamma gamma_plane(const Scalar& u, const Scalar& v);

// ---------------------------------------------------------------------------
// Segre variety (product of a line and a plane)

struct SegreParams {
  std::array<Scalar, 3> u;
  std::array<Scalar, 2> v;
};

/// p_i35 = u1 v_i, p_i36 = p_i45 = u2 v_i, p_i46 = u3 v_i, p356 = p456 = 0.
/// Throws InvalidParameters if u or v is zero.
RestrictedPoint segre_param(const SegreParams& sp);

/// The three Segre residuals vanish and p356 = p456 = 0.
bool segre_membership(const RestrictedPoint& p);

// ---------------------------------------------------------------------------
// Subring substructures

/// Scalar-matrix generators (a11 = a22 = a, b11 = b22 = b, a12 = b12 = 0):
/// (-a^3, -a^2 b, -a b^2, -a^2 b, -a b^2, -b^3, 0, 0).
RestrictedPoint twisted_cubic_param(const Scalar& a, const Scalar& b);

/// Dual-number generators (a22 = a11 = a, b22 = b11 = b).
RestrictedPoint dual_numbers_param(const Scalar& a, const Scalar& b, const Scalar& a12,
                                   const Scalar& b12);

/// Double-number generators (a12 = b12 = 0). Throws InvalidParameters unless
/// (a11, b11) != (0, 0) != (a22, b22).
RestrictedPoint double_numbers_param(const Scalar& a11, const Scalar& b11, const Scalar& a22,
                                     const Scalar& b22);

// ---------------------------------------------------------------------------
// Smoothness

/// The eight coordinate polynomials of param_x in the variables
/// (a11, b11, a22, b22, a12, b12).
const std::array<Polynomial, 8>& x_coordinate_polynomials();

/// Rank of the 6x8 matrix of formal partial derivatives of param_x at `xp`.
/// Throws DegenerateParameters if the image is zero.
std::size_t jacobian_param_rank(const XParams& xp);

/// Rank of the 9x8 matrix of formal gradients of the nine quadrics at `p`.
/// Throws PreconditionError if `p` is not on the variety.
std::size_t jacobian_equations_rank(const RestrictedPoint& p);

}  // namespace ternions
