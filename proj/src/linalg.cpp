#include "ternions/linalg.hpp"

#include <utility>

namespace ternions::linalg {

Matrix rref(Matrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Scalar scale = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= scale;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end());
  return rows;
}

std::size_t rank(Matrix rows) { return rref(std::move(rows)).size(); }

Scalar determinant(Matrix m) {
  if (m.empty()) throw UsageError("determinant of an empty matrix");
  const std::size_t n = m.size();
  Scalar det = Scalar::one(m[0][0].field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(det.field());
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Scalar scale = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const Scalar f = m[i][c] * scale;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

bool in_span(const Matrix& rows, const Row& v) {
  Matrix extended = rows;
  extended.push_back(v);
  return rank(rows) == rank(std::move(extended));
}

}  // namespace ternions::linalg
