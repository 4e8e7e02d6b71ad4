#include "ternions/variety.hpp"

#include "ternions/linalg.hpp"

namespace ternions {

namespace {

// Positions of the retained coordinates among the 20 Plücker coordinates.
constexpr std::array<std::array<int, 3>, 8> kRetained = {
    {{1, 3, 5}, {1, 3, 6}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}}};

constexpr std::array<std::array<int, 3>, 10> kVanishing = {{{1, 2, 3},
                                                            {1, 2, 4},
                                                            {1, 2, 5},
                                                            {1, 2, 6},
                                                            {1, 3, 4},
                                                            {1, 5, 6},
                                                            {2, 3, 4},
                                                            {2, 5, 6},
                                                            {3, 4, 5},
                                                            {3, 4, 6}}};

std::string triple_name(const std::array<int, 3>& t) {
  return "p" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
}

Quadric binomial(std::string name, QuadricGroup group, std::size_t x1, std::size_t y1,
                 std::size_t x2, std::size_t y2) {
  return {std::move(name), group,
          Polynomial::quadratic_term(8, 1, x1, y1) + Polynomial::quadratic_term(8, -1, x2, y2)};
}

Polynomial monomial6(std::int64_t c, std::array<unsigned, 6> e) {
  return Polynomial(6, {{c, std::vector<unsigned>(e.begin(), e.end())}});
}

bool both_zero(const Scalar& x, const Scalar& y) { return x.is_zero() && y.is_zero(); }

}  // namespace

RestrictedPoint RestrictedPoint::of(const FieldSpec& field,
                                    const std::array<std::int64_t, 8>& values) {
  RestrictedPoint out = zero(field);
  for (std::size_t n = 0; n < 8; ++n) out.coords_[n] = Scalar(field, values[n]);
  return out;
}

bool RestrictedPoint::is_zero() const noexcept {
  for (const auto& x : coords_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool RestrictedPoint::segre_block_zero() const noexcept {
  for (std::size_t n = P135; n <= P246; ++n) {
    if (!coords_[n].is_zero()) return false;
  }
  return true;
}

PluckerVector RestrictedPoint::expand() const {
  PluckerVector out(field());
  for (std::size_t n = 0; n < 8; ++n) {
    const auto& t = kRetained[n];
    out.at(t[0], t[1], t[2]) = coords_[n];
  }
  out.at(1, 4, 5) = coords_[P136];
  out.at(2, 4, 5) = coords_[P236];
  return out;
}

RestrictedPoint operator+(const RestrictedPoint& x, const RestrictedPoint& y) {
  RestrictedPoint out = x;
  for (std::size_t n = 0; n < 8; ++n) out.coords_[n] += y.coords_[n];
  return out;
}

RestrictedPoint operator*(const Scalar& s, const RestrictedPoint& x) {
  RestrictedPoint out = x;
  for (auto& c : out.coords_) c *= s;
  return out;
}

std::ostream& operator<<(std::ostream& os, const RestrictedPoint& p) {
  os << '(';
  for (std::size_t n = 0; n < 8; ++n) os << (n ? "," : "") << p.coords_[n];
  return os << ')';
}

RestrictedPoint restrict_to_ambient(const PluckerVector& p) {
  for (const auto& t : kVanishing) {
    if (!p.at(t[0], t[1], t[2]).is_zero()) {
      throw NotInAmbient("violated linear condition " + triple_name(t) + " = 0");
    }
  }
  if (p.at(1, 3, 6) != p.at(1, 4, 5)) throw NotInAmbient("violated linear condition p136 - p145 = 0");
  if (p.at(2, 3, 6) != p.at(2, 4, 5)) throw NotInAmbient("violated linear condition p236 - p245 = 0");
  RestrictedPoint out = RestrictedPoint::zero(p.field());
  for (std::size_t n = 0; n < 8; ++n) {
    const auto& t = kRetained[n];
    out[n] = p.at(t[0], t[1], t[2]);
  }
  return out;
}

RestrictedPoint normalize(const RestrictedPoint& p) {
  for (const auto& x : p.coords()) {
    if (!x.is_zero()) return x.inverse() * p;
  }
  throw UsageError("cannot normalize the zero vector");
}

bool projective_eq(const RestrictedPoint& p, const RestrictedPoint& q) {
  if (p.is_zero() || q.is_zero()) throw UsageError("projective comparison of a zero vector");
  return normalize(p) == normalize(q);
}

const char* to_string(QuadricGroup g) noexcept {
  switch (g) {
    case QuadricGroup::Cones: return "cones";
    case QuadricGroup::Segre: return "segre";
    case QuadricGroup::Pencil: return "pencil";
  }
  return "?";
}

const QuadricSystem& standard_quadrics() {
  // p145 is stored as p136 and p245 as p236.
  static const QuadricSystem system = {
      binomial("p135*p146-p145^2", QuadricGroup::Cones, P135, P146, P136, P136),
      binomial("p235*p246-p245^2", QuadricGroup::Cones, P235, P246, P236, P236),
      binomial("p146*p245-p145*p246", QuadricGroup::Segre, P146, P236, P136, P246),
      binomial("p135*p246-p235*p146", QuadricGroup::Segre, P135, P246, P235, P146),
      binomial("p135*p245-p145*p235", QuadricGroup::Segre, P135, P236, P136, P235),
      binomial("p135*p456-p145*p356", QuadricGroup::Pencil, P135, P456, P136, P356),
      binomial("p145*p456-p146*p356", QuadricGroup::Pencil, P136, P456, P146, P356),
      binomial("p235*p456-p245*p356", QuadricGroup::Pencil, P235, P456, P236, P356),
      binomial("p245*p456-p246*p356", QuadricGroup::Pencil, P236, P456, P246, P356),
  };
  return system;
}

bool QuadricResiduals::all_zero() const noexcept {
  for (const auto& x : cones)
    if (!x.is_zero()) return false;
  for (const auto& x : segre)
    if (!x.is_zero()) return false;
  for (const auto& x : pencil)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> eval_system(const QuadricSystem& system, const RestrictedPoint& p) {
  std::vector<Scalar> out;
  out.reserve(system.size());
  for (const auto& q : system) out.push_back(q.polynomial.evaluate(p.coords()));
  return out;
}

QuadricResiduals eval_quadrics(const RestrictedPoint& p) {
  const auto r = eval_system(standard_quadrics(), p);
  return {{r[0], r[1]}, {r[2], r[3], r[4]}, {r[5], r[6], r[7], r[8]}};
}

bool is_on_variety(const RestrictedPoint& p, const QuadricSystem& system) {
  for (const auto& q : system) {
    if (!q.polynomial.evaluate(p.coords()).is_zero()) return false;
  }
  return true;
}

bool is_on_variety(const RestrictedPoint& p) { return is_on_variety(p, standard_quadrics()); }

XParams XParams::of(const FieldSpec& f, std::int64_t a11, std::int64_t b11, std::int64_t a22,
                    std::int64_t b22, std::int64_t a12, std::int64_t b12) {
  return {Scalar(f, a11), Scalar(f, b11), Scalar(f, a22),
          Scalar(f, b22), Scalar(f, a12), Scalar(f, b12)};
}

bool XParams::is_unimodular() const noexcept {
  return !both_zero(a11, b11) && !both_zero(a22, b22);
}

YParams YParams::of(const FieldSpec& f, std::int64_t a22, std::int64_t b22, std::int64_t c22,
                    std::int64_t d22) {
  return {Scalar(f, a22), Scalar(f, b22), Scalar(f, c22), Scalar(f, d22)};
}

TernionPair YParams::generator() const {
  const Scalar zero = Scalar::zero(a22.field());
  return {{zero, c22, a22}, {zero, d22, b22}};
}

RestrictedPoint param_x(const XParams& xp) {
  const Scalar m = xp.twist();
  RestrictedPoint out(std::array<Scalar, 8>{
      -(xp.a11 * xp.a22 * xp.a22), -(xp.a11 * xp.a22 * xp.b22), -(xp.a11 * xp.b22 * xp.b22),
      -(xp.b11 * xp.a22 * xp.a22), -(xp.b11 * xp.a22 * xp.b22), -(xp.b11 * xp.b22 * xp.b22),
      xp.a22 * m, xp.b22 * m});
  if (out.is_zero()) throw DegenerateParameters("X-parameters have zero image");
  return out;
}

RestrictedPoint param_y(const YParams& yp) {
  const Scalar det = yp.determinant();
  if (det.is_zero()) throw InvalidParameters("Y-parameters need a22 d22 - b22 c22 != 0");
  RestrictedPoint out = RestrictedPoint::zero(det.field());
  out[P356] = yp.a22 * det;
  out[P456] = yp.b22 * det;
  return out;
}

RestrictedPoint param(const Params& params) {
  return std::visit(
      [](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, XParams>) {
          return param_x(p);
        } else {
          return param_y(p);
        }
      },
      params);
}

Params unparametrize(const RestrictedPoint& p) {
  if (p.is_zero() || !is_on_variety(p)) {
    throw PreconditionError("point is not on the variety");
  }
  const FieldSpec& f = p.field();
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);

  if (p.segre_block_zero()) {
    // Y-line. (c22, d22) is the lexicographically least pair with
    // a22 d22 - b22 c22 = 1.
    const Scalar& a22 = p[P356];
    const Scalar& b22 = p[P456];
    if (!a22.is_zero()) return YParams{a22, b22, zero, a22.inverse()};
    return YParams{a22, b22, -b22.inverse(), zero};
  }

  // The 2x3 array with rows (p_i35, p_i45, p_i46) has vanishing 2x2 minors,
  // so it factors as v (x) u.
  const std::array<std::array<Scalar, 3>, 2> rows = {
      {{p[P135], p[P136], p[P146]}, {p[P235], p[P236], p[P246]}}};
  const std::size_t lead_row = (rows[0][0].is_zero() && rows[0][1].is_zero() && rows[0][2].is_zero()) ? 1 : 0;
  const auto& u = rows[lead_row];
  std::size_t lead_col = 0;
  while (u[lead_col].is_zero()) ++lead_col;
  const Scalar lead_inv = u[lead_col].inverse();
  const std::array<Scalar, 2> v = {rows[0][lead_col] * lead_inv, rows[1][lead_col] * lead_inv};

  // u1 u3 = u2^2, so u = k (a22^2, a22 b22, b22^2).
  Scalar a22 = zero, b22 = one, k = u[2];
  if (!u[0].is_zero()) {
    a22 = u[0];
    b22 = u[1];
    k = u[0].inverse();
  }

  XParams out{-(k * v[0]), -(k * v[1]), a22, b22, zero, zero};

  // (p356, p456) = m (a22, b22).
  const Scalar m = a22.is_zero() ? p[P456] * b22.inverse() : p[P356] * a22.inverse();
  if (!b22.is_zero()) {
    out.a12 = m * b22.inverse();
  } else {
    out.b12 = -(m * a22.inverse());
  }
  return out;
}

PluckerVector conic_vector(int i, const Scalar& u, const Scalar& v) {
  if (i != 1 && i != 2) throw UsageError("conic index must be 1 or 2");
  PluckerVector out(u.field());
  out.at(i, 3, 5) = u * u;
  out.at(i, 3, 6) = u * v;
  out.at(i, 4, 5) = u * v;
  out.at(i, 4, 6) = v * v;
  return out;
}

PluckerVector line_vector(const Scalar& u, const Scalar& v) {
  PluckerVector out(u.field());
  out.at(3, 5, 6) = u;
  out.at(4, 5, 6) = v;
  return out;
}

std::size_t PlaneGamma::dimension() const {
  return linalg::rank({linalg::to_row(q1.coords()), linalg::to_row(q2.coords()),
                       linalg::to_row(r.coords())});
}

PlaneGamma gamma_plane(const Scalar& u, const Scalar& v) {
  if (both_zero(u, v)) throw InvalidParameters("plane parameter (u, v) must be nonzero");
  return {u, v, conic_vector(1, u, v), conic_vector(2, u, v), line_vector(u, v)};
}

RestrictedPoint segre_param(const SegreParams& sp) {
  if (sp.u[0].is_zero() && sp.u[1].is_zero() && sp.u[2].is_zero()) {
    throw InvalidParameters("Segre parameter u must be nonzero");
  }
  if (both_zero(sp.v[0], sp.v[1])) throw InvalidParameters("Segre parameter v must be nonzero");
  RestrictedPoint out = RestrictedPoint::zero(sp.u[0].field());
  for (std::size_t i = 0; i < 2; ++i) {
    out[3 * i + 0] = sp.u[0] * sp.v[i];
    out[3 * i + 1] = sp.u[1] * sp.v[i];
    out[3 * i + 2] = sp.u[2] * sp.v[i];
  }
  return out;
}

bool segre_membership(const RestrictedPoint& p) {
  if (!p[P356].is_zero() || !p[P456].is_zero()) return false;
  const auto r = eval_quadrics(p);
  for (const auto& x : r.segre) {
    if (!x.is_zero()) return false;
  }
  return true;
}

RestrictedPoint twisted_cubic_param(const Scalar& a, const Scalar& b) {
  if (both_zero(a, b)) throw InvalidParameters("twisted cubic parameter must be nonzero");
  const Scalar zero = Scalar::zero(a.field());
  return param_x({a, b, a, b, zero, zero});
}

RestrictedPoint dual_numbers_param(const Scalar& a, const Scalar& b, const Scalar& a12,
                                   const Scalar& b12) {
  if (both_zero(a, b)) throw InvalidParameters("dual-number parameter (a, b) must be nonzero");
  return param_x({a, b, a, b, a12, b12});
}

RestrictedPoint double_numbers_param(const Scalar& a11, const Scalar& b11, const Scalar& a22,
                                     const Scalar& b22) {
  if (both_zero(a11, b11) || both_zero(a22, b22)) {
    throw InvalidParameters("double-number parameters need (a11, b11) != 0 != (a22, b22)");
  }
  const Scalar zero = Scalar::zero(a11.field());
  return param_x({a11, b11, a22, b22, zero, zero});
}

const std::array<Polynomial, 8>& x_coordinate_polynomials() {
  // Variables: a11, b11, a22, b22, a12, b12.
  static const std::array<Polynomial, 8> polys = {
      monomial6(-1, {1, 0, 2, 0, 0, 0}),
      monomial6(-1, {1, 0, 1, 1, 0, 0}),
      monomial6(-1, {1, 0, 0, 2, 0, 0}),
      monomial6(-1, {0, 1, 2, 0, 0, 0}),
      monomial6(-1, {0, 1, 1, 1, 0, 0}),
      monomial6(-1, {0, 1, 0, 2, 0, 0}),
      monomial6(1, {0, 0, 1, 1, 1, 0}) + monomial6(-1, {0, 0, 2, 0, 0, 1}),
      monomial6(1, {0, 0, 0, 2, 1, 0}) + monomial6(-1, {0, 0, 1, 1, 0, 1}),
  };
  return polys;
}

std::size_t jacobian_param_rank(const XParams& xp) {
  param_x(xp);  // rejects a zero image
  const std::array<Scalar, 6> at = {xp.a11, xp.b11, xp.a22, xp.b22, xp.a12, xp.b12};
  linalg::Matrix jac;
  for (std::size_t var = 0; var < 6; ++var) {
    linalg::Row row;
    for (const auto& poly : x_coordinate_polynomials()) {
      row.push_back(poly.derivative(var).evaluate(at));
    }
    jac.push_back(std::move(row));
  }
  return linalg::rank(std::move(jac));
}

std::size_t jacobian_equations_rank(const RestrictedPoint& p) {
  if (p.is_zero() || !is_on_variety(p)) throw PreconditionError("point is not on the variety");
  linalg::Matrix jac;
  for (const auto& q : standard_quadrics()) {
    linalg::Row row;
    for (std::size_t var = 0; var < 8; ++var) {
      row.push_back(q.polynomial.derivative(var).evaluate(p.coords()));
    }
    jac.push_back(std::move(row));
  }
  return linalg::rank(std::move(jac));
}

}  // namespace ternions
