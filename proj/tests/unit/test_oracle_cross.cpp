// Independent brute-force oracles on plain int residues, compared with the
// library's enumerations.

#include <gtest/gtest.h>

#include <set>

#include "ternions/point_sets.hpp"

using namespace ternions;

namespace {

using Point8 = std::array<int, 8>;
using Vec6 = std::array<int, 6>;  // a11, b11, a22, b22, a12, b12

int md(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  return 0;
}

Point8 normalized(Point8 v, int p) {
  for (int x : v) {
    if (x != 0) {
      const int s = inverse_mod(x, p);
      for (int& y : v) y = y * s % p;
      return v;
    }
  }
  return v;
}

// Row-reduce and keep the nonzero rows.
std::vector<Vec6> basis_of(std::vector<Vec6> rows, int p) {
  std::vector<Vec6> out;
  for (int col = 0; col < 6; ++col) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Vec6& r) { return r[col] != 0; });
    if (it == rows.end()) continue;
    Vec6 pivot = *it;
    rows.erase(it);
    const int s = inverse_mod(pivot[col], p);
    for (int& x : pivot) x = x * s % p;
    for (auto& r : rows) {
      const int c = r[col];
      for (int k = 0; k < 6; ++k) r[k] = md(r[k] - c * pivot[k], p);
    }
    out.push_back(pivot);
  }
  return out;
}

int det3(const std::vector<Vec6>& b, int i, int j, int k, int p) {
  auto m = [&](int r, int c) { return static_cast<long long>(b[r][c]); };
  const int c[3] = {i, j, k};
  long long d = 0;
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {0, 2, 1}, {1, 0, 2}};
  for (int n = 0; n < 6; ++n) {
    const long long term = m(0, c[perms[n][0]]) * m(1, c[perms[n][1]]) * m(2, c[perms[n][2]]);
    d += n < 3 ? term : -term;
  }
  return md(d, p);
}

// Plücker coordinate p_ijk in terms of the pair coordinates: pair
// coordinate order is (a11, b11, a22, b22, a12, b12), i.e. columns 1..6.
int pl(const std::vector<Vec6>& b, int i, int j, int k, int p) { return det3(b, i - 1, j - 1, k - 1, p); }

struct Images {
  std::set<Point8> points;
  std::size_t free_pairs = 0;
  bool ambient_violated = false;
};

Images oracle_images(int p) {
  Images out;
  const int q6 = p * p * p * p * p * p;
  for (int idx = 0; idx < q6; ++idx) {
    int d[6], r = idx;
    for (int n = 5; n >= 0; --n) {
      d[n] = r % p;
      r /= p;
    }
    const int a11 = d[0], a12 = d[1], a22 = d[2], b11 = d[3], b12 = d[4], b22 = d[5];
    // Left multiples by every ternion (t11, t12, t22).
    std::vector<Vec6> orbit;
    for (int t11 = 0; t11 < p; ++t11)
      for (int t12 = 0; t12 < p; ++t12)
        for (int t22 = 0; t22 < p; ++t22) {
          orbit.push_back({md(t11 * a11, p), md(t11 * b11, p), md(t22 * a22, p), md(t22 * b22, p),
                           md(t11 * a12 + t12 * a22, p), md(t11 * b12 + t12 * b22, p)});
        }
    const auto b = basis_of(orbit, p);
    if (b.size() != 3) continue;
    ++out.free_pairs;
    for (auto [i, j, k] : {std::array{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4},
                           {1, 5, 6}, {2, 3, 4}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}}) {
      if (pl(b, i, j, k, p) != 0) out.ambient_violated = true;
    }
    if (pl(b, 1, 3, 6, p) != pl(b, 1, 4, 5, p) || pl(b, 2, 3, 6, p) != pl(b, 2, 4, 5, p)) {
      out.ambient_violated = true;
    }
    out.points.insert(normalized({pl(b, 1, 3, 5, p), pl(b, 1, 3, 6, p), pl(b, 1, 4, 6, p),
                                  pl(b, 2, 3, 5, p), pl(b, 2, 3, 6, p), pl(b, 2, 4, 6, p),
                                  pl(b, 3, 5, 6, p), pl(b, 4, 5, 6, p)},
                                 p));
  }
  return out;
}

// The nine quadrics, written with p145 = p136 and p245 = p236.
bool oracle_on_variety(const Point8& x, int p) {
  const int p135 = x[0], p136 = x[1], p146 = x[2], p235 = x[3], p236 = x[4], p246 = x[5],
            p356 = x[6], p456 = x[7];
  const int p145 = p136, p245 = p236;
  const long long eqs[9] = {
      p135 * p146 - p145 * p145, p235 * p246 - p245 * p245, p146 * p245 - p145 * p246,
      p135 * p246 - p235 * p146, p135 * p245 - p145 * p235, p135 * p456 - p145 * p356,
      p145 * p456 - p146 * p356, p235 * p456 - p245 * p356, p245 * p456 - p246 * p356};
  for (long long e : eqs) {
    if (md(e, p) != 0) return false;
  }
  return true;
}

std::set<Point8> oracle_variety(int p) {
  std::set<Point8> out;
  int total = 1;
  for (int n = 0; n < 8; ++n) total *= p;
  for (int idx = 1; idx < total; ++idx) {
    Point8 x;
    int r = idx;
    for (int n = 7; n >= 0; --n) {
      x[n] = r % p;
      r /= p;
    }
    if (normalized(x, p) != x) continue;
    if (oracle_on_variety(x, p)) out.insert(x);
  }
  return out;
}

std::set<Point8> residues(const std::vector<RestrictedPoint>& pts) {
  std::set<Point8> out;
  for (const auto& pt : pts) {
    Point8 x;
    for (std::size_t n = 0; n < 8; ++n) x[n] = static_cast<int>(pt[n].residue());
    out.insert(x);
  }
  return out;
}

class OracleCross : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(OracleCross, ImagesMatchLibrary) {
  const int p = GetParam();
  const Images images = oracle_images(p);
  EXPECT_FALSE(images.ambient_violated);
  EXPECT_EQ(images.points, residues(submodule_images(FieldSpec::prime(p), ClassFilter::Both)));
}

TEST_P(OracleCross, VarietyMatchesLibrary) {
  const int p = GetParam();
  EXPECT_EQ(oracle_variety(p), residues(enumerate_variety_points(FieldSpec::prime(p))));
}

TEST_P(OracleCross, ImagesEqualSolutions) {
  const int p = GetParam();
  EXPECT_EQ(oracle_images(p).points, oracle_variety(p));
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, OracleCross, ::testing::Values(2, 3, 5));
