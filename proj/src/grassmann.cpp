#include "ternions/grassmann.hpp"

#include "ternions/linalg.hpp"

namespace ternions {

namespace {

constexpr std::array<std::array<int, 3>, 20> kTriples = [] {
  std::array<std::array<int, 3>, 20> out{};
  std::size_t n = 0;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k) out[n++] = {i, j, k};
  return out;
}();

Scalar minor3(const std::array<Vector6, 3>& rows, int i, int j, int k) {
  const auto c0 = static_cast<std::size_t>(i - 1);
  const auto c1 = static_cast<std::size_t>(j - 1);
  const auto c2 = static_cast<std::size_t>(k - 1);
  const auto& r0 = rows[0];
  const auto& r1 = rows[1];
  const auto& r2 = rows[2];
  return r0[c0] * (r1[c1] * r2[c2] - r1[c2] * r2[c1]) -
         r0[c1] * (r1[c0] * r2[c2] - r1[c2] * r2[c0]) +
         r0[c2] * (r1[c0] * r2[c1] - r1[c1] * r2[c0]);
}

}  // namespace

TripleIndex::TripleIndex(int i, int j, int k) : i_(i), j_(j), k_(k) {
  if (!(1 <= i && i < j && j < k && k <= 6)) {
    throw UsageError("invalid triple index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + ")");
  }
}

TripleIndex TripleIndex::from_position(std::size_t position) {
  if (position >= kCount) throw UsageError("triple position out of range");
  const auto& t = kTriples[position];
  return TripleIndex(t[0], t[1], t[2]);
}

std::size_t TripleIndex::position() const noexcept {
  for (std::size_t n = 0; n < kCount; ++n) {
    if (kTriples[n][0] == i_ && kTriples[n][1] == j_ && kTriples[n][2] == k_) return n;
  }
  return kCount;  // unreachable for a validated triple
}

std::string TripleIndex::to_string() const {
  return std::to_string(i_) + std::to_string(j_) + std::to_string(k_);
}

bool PluckerVector::is_zero() const noexcept {
  for (const auto& x : coords_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

PluckerVector operator+(const PluckerVector& x, const PluckerVector& y) {
  PluckerVector out = x;
  for (std::size_t n = 0; n < 20; ++n) out.coords_[n] += y.coords_[n];
  return out;
}

PluckerVector operator*(const Scalar& s, const PluckerVector& x) {
  PluckerVector out = x;
  for (auto& c : out.coords_) c *= s;
  return out;
}

std::ostream& operator<<(std::ostream& os, const PluckerVector& v) {
  os << '(';
  for (std::size_t n = 0; n < 20; ++n) os << (n ? "," : "") << v.coords_[n];
  return os << ')';
}

PluckerVector plucker(const std::array<Vector6, 3>& rows) {
  PluckerVector out(rows[0][0].field());
  for (std::size_t n = 0; n < 20; ++n) {
    const auto& t = kTriples[n];
    out[TripleIndex::from_position(n)] = minor3(rows, t[0], t[1], t[2]);
  }
  if (out.is_zero()) {
    linalg::Matrix m;
    for (const auto& r : rows) m.push_back(linalg::to_row(r));
    throw RankError("rows do not span a 3-dimensional subspace", linalg::rank(std::move(m)));
  }
  return out;
}

PluckerVector plucker(const Subspace3& sub) {
  if (sub.dim() != 3) throw RankError("Plücker coordinates need a 3-dimensional subspace", sub.dim());
  return plucker(std::array<Vector6, 3>{sub.basis()[0], sub.basis()[1], sub.basis()[2]});
}

bool projective_eq(const PluckerVector& p, const PluckerVector& q) {
  if (p.is_zero() || q.is_zero()) throw UsageError("projective comparison of a zero vector");
  return normalize(p) == normalize(q);
}

PluckerVector normalize(const PluckerVector& p) {
  for (const auto& x : p.coords()) {
    if (!x.is_zero()) return x.inverse() * p;
  }
  throw UsageError("cannot normalize the zero vector");
}

PluckerVector basepoint(const FieldSpec& field, int i, int j, int k) {
  PluckerVector out(field);
  out.at(i, j, k) = Scalar::one(field);
  return out;
}

}  // namespace ternions
