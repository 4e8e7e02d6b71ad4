#pragma once

// Dense exact linear algebra over a FieldSpec.

#include <span>
#include <vector>

#include "ternions/exactfield.hpp"

namespace ternions::linalg {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

/// Reduced row-echelon form with zero rows dropped. Pivots strictly increase,
/// pivot entries are 1 and pivot columns are otherwise zero.
Matrix rref(Matrix rows);

std::size_t rank(Matrix rows);

/// Determinant of a square matrix.
Scalar determinant(Matrix square);

/// True iff `v` lies in the row span of `rows`.
bool in_span(const Matrix& rows, const Row& v);

template <std::size_t N>
Row to_row(const std::array<Scalar, N>& a) {
  return Row(a.begin(), a.end());
}

}  // namespace ternions::linalg
