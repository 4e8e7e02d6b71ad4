#pragma once

// Sparse multivariate polynomials with integer coefficients, evaluated in any
// FieldSpec. Derivatives are formal, so they are valid in every
// characteristic.

#include <cstdint>
#include <span>
#include <vector>

#include "ternions/exactfield.hpp"

namespace ternions {

struct Monomial {
  std::int64_t coefficient;
  std::vector<unsigned> exponents;  // one per variable

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class Polynomial {
 public:
  Polynomial(std::size_t variables, std::vector<Monomial> terms);

  /// coefficient * x_i * x_j.
  static Polynomial quadratic_term(std::size_t variables, std::int64_t coefficient, std::size_t i,
                                   std::size_t j);

  std::size_t variables() const noexcept { return variables_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  std::vector<Monomial>& terms() noexcept { return terms_; }

  Polynomial derivative(std::size_t variable) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b);

 private:
  std::size_t variables_;
  std::vector<Monomial> terms_;
};

}  // namespace ternions
