#include "ternions/oracles.hpp"

#include <set>

#include "ternions/linalg.hpp"

namespace ternions::oracle {

bool ternion_has_inverse(const Ternion& t) {
  const Ternion one = Ternion::identity(t.field());
  for (const auto& s : enumerate_ternions(t.field())) {
    if (t * s == one) return true;
  }
  return false;
}

bool has_unimodular_witness(const TernionPair& pair) {
  const auto all = enumerate_ternions(pair.field());
  const Ternion one = Ternion::identity(pair.field());
  for (const auto& c : all) {
    const Ternion ac = pair.a * c;
    for (const auto& d : all) {
      if (ac + pair.b * d == one) return true;
    }
  }
  return false;
}

namespace {

// Exists (x, y) with p x + q y = lhs and r x + s y = rhs.
bool solvable(const std::vector<Ternion>& all, const Ternion& p, const Ternion& q,
              const Ternion& r, const Ternion& s, const Ternion& lhs, const Ternion& rhs) {
  for (const auto& x : all) {
    const Ternion px = p * x;
    const Ternion rx = r * x;
    for (const auto& y : all) {
      if (px + q * y == lhs && rx + s * y == rhs) return true;
    }
  }
  return false;
}

// Exists (x, y) with x p + y r = lhs and x q + y s = rhs.
bool solvable_left(const std::vector<Ternion>& all, const Ternion& p, const Ternion& q,
                   const Ternion& r, const Ternion& s, const Ternion& lhs, const Ternion& rhs) {
  for (const auto& x : all) {
    const Ternion xp = x * p;
    const Ternion xq = x * q;
    for (const auto& y : all) {
      if (xp + y * r == lhs && xq + y * s == rhs) return true;
    }
  }
  return false;
}

}  // namespace

bool has_inverse(const TernionMatrix2& m) {
  const auto& f = m.s11.field();
  const auto all = enumerate_ternions(f);
  const Ternion one = Ternion::identity(f);
  const Ternion zero = Ternion::zero(f);
  // Columns of a right inverse.
  if (!solvable(all, m.s11, m.s12, m.s21, m.s22, one, zero)) return false;
  if (!solvable(all, m.s11, m.s12, m.s21, m.s22, zero, one)) return false;
  // Rows of a left inverse.
  if (!solvable_left(all, m.s11, m.s12, m.s21, m.s22, one, zero)) return false;
  return solvable_left(all, m.s11, m.s12, m.s21, m.s22, zero, one);
}

bool right_action_is_bijective(const TernionMatrix2& s) {
  const auto& f = s.s11.field();
  const Ternion zero = Ternion::zero(f);
  linalg::Matrix rows;
  for (const auto& unit : {Ternion::e11(f), Ternion::e12(f), Ternion::e22(f)}) {
    for (const TernionPair& x : {TernionPair{unit, zero}, TernionPair{zero, unit}}) {
      rows.push_back(linalg::to_row(embed_pair(act(x, s))));
    }
  }
  return linalg::rank(std::move(rows)) == 6;
}

bool orbit_map_injective(const TernionPair& pair) {
  const auto all = enumerate_ternions(pair.field());
  std::set<TernionPair> image;
  for (const auto& t : all) image.insert(t * pair);
  return image.size() == all.size();
}

TernionMatrix2 matrix_from_index(const FieldSpec& spec, std::uint64_t index) {
  const auto p = static_cast<std::uint64_t>(spec.modulus());
  std::array<std::int64_t, 12> d{};
  for (int i = 11; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  return {Ternion::of(spec, d[0], d[1], d[2]), Ternion::of(spec, d[3], d[4], d[5]),
          Ternion::of(spec, d[6], d[7], d[8]), Ternion::of(spec, d[9], d[10], d[11])};
}

}  // namespace ternions::oracle
