#pragma once

// Exhaustive point sets over finite fields. Every function returns
// normalized points, sorted and deduplicated, and throws
// UnsupportedEnumeration for the rational field.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ternions/variety.hpp"

namespace ternions {

/// (q^n - 1) / (q - 1), the number of points of PG(n - 1, q).
std::uint64_t projective_space_size(const FieldSpec& spec, unsigned n);

/// Normalized representatives (u, v) of the points of P^1(F_q), sorted.
std::vector<std::pair<Scalar, Scalar>> projective_line(const FieldSpec& spec);

/// Projective points in the span of `vectors`.
std::vector<RestrictedPoint> span_points(std::span<const RestrictedPoint> vectors);

/// Brute force over all (q^8 - 1)/(q - 1) projective points of the ambient
/// space.
std::vector<RestrictedPoint> enumerate_variety_points(const FieldSpec& spec, unsigned workers = 1,
                                                      const QuadricSystem& system = standard_quadrics());

/// Plücker images of all free cyclic submodules of the requested class.
std::vector<RestrictedPoint> submodule_images(const FieldSpec& spec, ClassFilter filter,
                                              unsigned workers = 1);

/// param_y over all valid YParams.
std::vector<RestrictedPoint> y_param_image(const FieldSpec& spec);

/// The q+1 planes gamma(u, v), ordered by (u:v) as in projective_line.
std::vector<PlaneGamma> gamma_planes(const FieldSpec& spec);

/// segre_param over all parameters.
std::vector<RestrictedPoint> segre_image(const FieldSpec& spec);
/// All ambient points with segre_membership, by brute force.
std::vector<RestrictedPoint> segre_solutions(const FieldSpec& spec, unsigned workers = 1);

std::vector<RestrictedPoint> twisted_cubic_points(const FieldSpec& spec);
std::vector<RestrictedPoint> tube_points(const FieldSpec& spec);
std::vector<RestrictedPoint> dual_surface_points(const FieldSpec& spec);

/// Vector dimension spanned by a set of points.
std::size_t span_rank(std::span<const RestrictedPoint> points);

}  // namespace ternions
