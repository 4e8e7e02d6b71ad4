#include "ternions/polynomial.hpp"

namespace ternions {

Polynomial::Polynomial(std::size_t variables, std::vector<Monomial> terms)
    : variables_(variables), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.exponents.size() != variables_) throw UsageError("monomial arity mismatch");
  }
}

Polynomial Polynomial::quadratic_term(std::size_t variables, std::int64_t coefficient, std::size_t i,
                                      std::size_t j) {
  std::vector<unsigned> e(variables, 0);
  ++e.at(i);
  ++e.at(j);
  return Polynomial(variables, {{coefficient, std::move(e)}});
}

Polynomial Polynomial::derivative(std::size_t variable) const {
  if (variable >= variables_) throw UsageError("derivative variable out of range");
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    const unsigned e = t.exponents[variable];
    if (e == 0) continue;
    Monomial d = t;
    d.coefficient *= static_cast<std::int64_t>(e);
    d.exponents[variable] = e - 1;
    out.push_back(std::move(d));
  }
  return Polynomial(variables_, std::move(out));
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != variables_) throw UsageError("evaluation point arity mismatch");
  if (point.empty()) throw UsageError("cannot evaluate a polynomial in zero variables");
  const FieldSpec& field = point[0].field();
  Scalar sum = Scalar::zero(field);
  for (const auto& t : terms_) {
    Scalar term(field, t.coefficient);
    for (std::size_t v = 0; v < variables_; ++v) {
      for (unsigned e = 0; e < t.exponents[v]; ++e) term *= point[v];
    }
    sum += term;
  }
  return sum;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  if (a.variables_ != b.variables_) throw UsageError("polynomial arity mismatch");
  a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
  return a;
}

}  // namespace ternions
