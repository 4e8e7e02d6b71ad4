#include "ternions/tmodule.hpp"

#include <stdexcept>
#include <string>

#include "ternions/linalg.hpp"
#include "ternions/parallel.hpp"

namespace ternions {

TernionPair TernionPair::zero(const FieldSpec& f) { return {Ternion::zero(f), Ternion::zero(f)}; }
TernionPair TernionPair::x0(const FieldSpec& f) { return {Ternion::identity(f), Ternion::zero(f)}; }
TernionPair TernionPair::y0(const FieldSpec& f) { return {Ternion::e22(f), Ternion::e12(f)}; }

Vector6 embed_pair(const TernionPair& p) {
  return {p.a.a11, p.b.a11, p.a.a22, p.b.a22, p.a.a12, p.b.a12};
}

TernionPair unembed_pair(const Vector6& v) {
  return {{v[0], v[4], v[2]}, {v[1], v[5], v[3]}};
}

Subspace3 Subspace3::span(std::span<const Vector6> vectors) {
  Subspace3 out;
  if (vectors.empty()) return out;
  linalg::Matrix rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(linalg::to_row(v));
  rows = linalg::rref(std::move(rows));
  if (rows.size() > 3) throw RankError("span exceeds dimension 3", rows.size());
  for (const auto& r : rows) out.basis_.push_back({r[0], r[1], r[2], r[3], r[4], r[5]});
  return out;
}

bool Subspace3::contains(const Vector6& v) const {
  bool zero = true;
  for (const auto& x : v) zero = zero && x.is_zero();
  if (zero) return true;
  if (basis_.empty()) return false;
  linalg::Matrix rows;
  for (const auto& b : basis_) rows.push_back(linalg::to_row(b));
  return linalg::in_span(rows, linalg::to_row(v));
}

TernionMatrix2 TernionMatrix2::identity(const FieldSpec& f) {
  return {Ternion::identity(f), Ternion::zero(f), Ternion::zero(f), Ternion::identity(f)};
}

Subspace3 cyclic_submodule(const TernionPair& pair) {
  const auto& f = pair.field();
  const std::array<Vector6, 3> images = {embed_pair(Ternion::e11(f) * pair),
                                         embed_pair(Ternion::e12(f) * pair),
                                         embed_pair(Ternion::e22(f) * pair)};
  return Subspace3::span(images);
}

bool is_free(const TernionPair& pair) { return cyclic_submodule(pair).dim() == 3; }

bool is_unimodular(const TernionPair& pair) {
  const bool first = !pair.a.a11.is_zero() || !pair.b.a11.is_zero();
  const bool second = !pair.a.a22.is_zero() || !pair.b.a22.is_zero();
  return first && second;
}

Classification classify(const TernionPair& pair) {
  const Subspace3 sub = cyclic_submodule(pair);
  if (sub.dim() < 3) return {PairClass::NonFree, sub.dim(), std::nullopt};
  if (is_unimodular(pair)) return {PairClass::X, 3, std::nullopt};

  // Free but not unimodular: E22.(A, B) = 0 unless (a22, b22) != 0, so the
  // first column of both A and B vanishes and every vector of the submodule
  // has zero a11- and b11-coordinates.
  for (const auto& v : sub.basis()) {
    if (!v[0].is_zero() || !v[1].is_zero()) {
      throw std::logic_error("free non-unimodular submodule with nonzero first column");
    }
  }
  Scalar det = pair.a.a22 * pair.b.a12 - pair.b.a22 * pair.a.a12;
  if (det.is_zero()) {
    throw std::logic_error("free non-unimodular generator with a22 d22 - b22 c22 = 0");
  }
  return {PairClass::Y, 3, std::move(det)};
}

const char* to_string(PairClass c) noexcept {
  switch (c) {
    case PairClass::X: return "X";
    case PairClass::Y: return "Y";
    case PairClass::NonFree: return "NonFree";
  }
  return "?";
}

std::string to_string(const Classification& c) {
  if (c.kind == PairClass::NonFree) return "NonFree(" + std::to_string(c.dim) + ")";
  return to_string(c.kind);
}

bool mat_is_invertible(const TernionMatrix2& s) {
  const Scalar d1 = s.s11.a11 * s.s22.a11 - s.s12.a11 * s.s21.a11;
  const Scalar d2 = s.s11.a22 * s.s22.a22 - s.s12.a22 * s.s21.a22;
  return !d1.is_zero() && !d2.is_zero();
}

TernionPair act(const TernionPair& pair, const TernionMatrix2& s) {
  return {pair.a * s.s11 + pair.b * s.s21, pair.a * s.s12 + pair.b * s.s22};
}

std::uint64_t pair_count(const FieldSpec& spec) {
  if (!spec.is_finite()) throw UnsupportedEnumeration("pairs over the rational field are infinite");
  std::uint64_t p = static_cast<std::uint64_t>(spec.modulus());
  return p * p * p * p * p * p;
}

TernionPair pair_from_index(const FieldSpec& spec, std::uint64_t index) {
  if (!spec.is_finite()) throw UnsupportedEnumeration("pairs over the rational field are infinite");
  const auto p = static_cast<std::uint64_t>(spec.modulus());
  std::array<std::int64_t, 6> digits{};
  for (int i = 5; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  return {Ternion::of(spec, digits[0], digits[1], digits[2]),
          Ternion::of(spec, digits[3], digits[4], digits[5])};
}

std::vector<Subspace3> enumerate_free_submodules(const FieldSpec& spec, ClassFilter filter,
                                                 unsigned workers) {
  auto subs = parallel_collect<Subspace3>(
      pair_count(spec), workers, [&](std::uint64_t i, std::vector<Subspace3>& out) {
        const TernionPair pair = pair_from_index(spec, i);
        Subspace3 sub = cyclic_submodule(pair);
        if (sub.dim() != 3) return;
        const bool unimodular = is_unimodular(pair);
        if ((filter == ClassFilter::X && !unimodular) || (filter == ClassFilter::Y && unimodular)) {
          return;
        }
        out.push_back(std::move(sub));
      });
  sort_unique(subs);
  return subs;
}

}  // namespace ternions
