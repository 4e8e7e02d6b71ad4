#include "ternions/point_sets.hpp"

#include "ternions/linalg.hpp"
#include "ternions/parallel.hpp"

namespace ternions {

namespace {

void require_finite(const FieldSpec& spec) {
  if (!spec.is_finite()) throw UnsupportedEnumeration("enumeration needs a finite field");
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

// The index-th normalized vector of F_q^8: vectors with leading 1 at
// position 0 come first, then leading position 1, and so on.
RestrictedPoint projective_point(const FieldSpec& spec, std::uint64_t index) {
  const auto q = static_cast<std::uint64_t>(spec.modulus());
  RestrictedPoint out = RestrictedPoint::zero(spec);
  for (unsigned lead = 0; lead < 8; ++lead) {
    const std::uint64_t block = ipow(q, 7 - lead);
    if (index >= block) {
      index -= block;
      continue;
    }
    out[lead] = Scalar::one(spec);
    for (unsigned pos = 7; pos > lead; --pos) {
      out[pos] = Scalar(spec, static_cast<std::int64_t>(index % q));
      index /= q;
    }
    return out;
  }
  throw UsageError("projective point index out of range");
}

std::vector<RestrictedPoint> normalized_sorted(std::vector<RestrictedPoint> pts) {
  for (auto& p : pts) p = normalize(p);
  sort_unique(pts);
  return pts;
}

}  // namespace

std::uint64_t projective_space_size(const FieldSpec& spec, unsigned n) {
  require_finite(spec);
  const auto q = static_cast<std::uint64_t>(spec.modulus());
  return (ipow(q, n) - 1) / (q - 1);
}

std::vector<std::pair<Scalar, Scalar>> projective_line(const FieldSpec& spec) {
  require_finite(spec);
  std::vector<std::pair<Scalar, Scalar>> out;
  out.emplace_back(Scalar::zero(spec), Scalar::one(spec));
  for (const auto& t : enumerate_field(spec)) out.emplace_back(Scalar::one(spec), t);
  return out;
}

std::vector<RestrictedPoint> span_points(std::span<const RestrictedPoint> vectors) {
  if (vectors.empty()) return {};
  const FieldSpec& spec = vectors[0].field();
  require_finite(spec);
  const auto q = static_cast<std::uint64_t>(spec.modulus());
  const std::uint64_t total = ipow(q, static_cast<unsigned>(vectors.size()));
  std::vector<RestrictedPoint> out;
  for (std::uint64_t index = 1; index < total; ++index) {
    RestrictedPoint p = RestrictedPoint::zero(spec);
    std::uint64_t rest = index;
    for (const auto& v : vectors) {
      p = p + Scalar(spec, static_cast<std::int64_t>(rest % q)) * v;
      rest /= q;
    }
    if (!p.is_zero()) out.push_back(normalize(p));
  }
  sort_unique(out);
  return out;
}

std::vector<RestrictedPoint> PlaneGamma::points() const {
  const std::array<RestrictedPoint, 3> span = {restrict_to_ambient(q1), restrict_to_ambient(q2),
                                               restrict_to_ambient(r)};
  return span_points(span);
}

std::vector<RestrictedPoint> enumerate_variety_points(const FieldSpec& spec, unsigned workers,
                                                      const QuadricSystem& system) {
  require_finite(spec);
  auto pts = parallel_collect<RestrictedPoint>(
      projective_space_size(spec, 8), workers,
      [&](std::uint64_t i, std::vector<RestrictedPoint>& out) {
        RestrictedPoint p = projective_point(spec, i);
        if (is_on_variety(p, system)) out.push_back(std::move(p));
      });
  sort_unique(pts);
  return pts;
}

std::vector<RestrictedPoint> submodule_images(const FieldSpec& spec, ClassFilter filter,
                                              unsigned workers) {
  std::vector<RestrictedPoint> out;
  for (const auto& sub : enumerate_free_submodules(spec, filter, workers)) {
    out.push_back(normalize(restrict_to_ambient(plucker(sub))));
  }
  sort_unique(out);
  return out;
}

std::vector<RestrictedPoint> y_param_image(const FieldSpec& spec) {
  const auto elems = enumerate_field(spec);
  std::vector<RestrictedPoint> out;
  for (const auto& a22 : elems)
    for (const auto& b22 : elems)
      for (const auto& c22 : elems)
        for (const auto& d22 : elems) {
          YParams yp{a22, b22, c22, d22};
          if (yp.determinant().is_zero()) continue;
          out.push_back(param_y(yp));
        }
  return normalized_sorted(std::move(out));
}

std::vector<PlaneGamma> gamma_planes(const FieldSpec& spec) {
  std::vector<PlaneGamma> out;
  for (const auto& [u, v] : projective_line(spec)) out.push_back(gamma_plane(u, v));
  return out;
}

std::vector<RestrictedPoint> segre_image(const FieldSpec& spec) {
  const auto elems = enumerate_field(spec);
  std::vector<RestrictedPoint> out;
  for (const auto& u1 : elems)
    for (const auto& u2 : elems)
      for (const auto& u3 : elems) {
        if (u1.is_zero() && u2.is_zero() && u3.is_zero()) continue;
        for (const auto& v1 : elems)
          for (const auto& v2 : elems) {
            if (v1.is_zero() && v2.is_zero()) continue;
            out.push_back(segre_param({{u1, u2, u3}, {v1, v2}}));
          }
      }
  return normalized_sorted(std::move(out));
}

std::vector<RestrictedPoint> segre_solutions(const FieldSpec& spec, unsigned workers) {
  require_finite(spec);
  auto pts = parallel_collect<RestrictedPoint>(
      projective_space_size(spec, 8), workers,
      [&](std::uint64_t i, std::vector<RestrictedPoint>& out) {
        RestrictedPoint p = projective_point(spec, i);
        if (segre_membership(p)) out.push_back(std::move(p));
      });
  sort_unique(pts);
  return pts;
}

std::vector<RestrictedPoint> twisted_cubic_points(const FieldSpec& spec) {
  std::vector<RestrictedPoint> out;
  for (const auto& [a, b] : projective_line(spec)) out.push_back(twisted_cubic_param(a, b));
  return normalized_sorted(std::move(out));
}

std::vector<RestrictedPoint> tube_points(const FieldSpec& spec) {
  std::vector<RestrictedPoint> out;
  for (const auto& [a11, b11] : projective_line(spec))
    for (const auto& [a22, b22] : projective_line(spec))
      out.push_back(double_numbers_param(a11, b11, a22, b22));
  return normalized_sorted(std::move(out));
}

std::vector<RestrictedPoint> dual_surface_points(const FieldSpec& spec) {
  const auto elems = enumerate_field(spec);
  std::vector<RestrictedPoint> out;
  for (const auto& [a, b] : projective_line(spec))
    for (const auto& a12 : elems)
      for (const auto& b12 : elems) out.push_back(dual_numbers_param(a, b, a12, b12));
  return normalized_sorted(std::move(out));
}

std::size_t span_rank(std::span<const RestrictedPoint> points) {
  linalg::Matrix rows;
  for (const auto& p : points) rows.push_back(linalg::to_row(p.coords()));
  return linalg::rank(std::move(rows));
}

}  // namespace ternions
