#include "ternions/exactfield.hpp"

#include <charconv>
#include <limits>

namespace ternions {

namespace {

std::int64_t reduce(std::int64_t value, std::int64_t p) {
  std::int64_t r = value % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; `a` must be a nonzero residue.
std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair(r, old_r - q * r);
    std::tie(old_s, s) = std::pair(s, old_s - q * s);
  }
  return reduce(old_s, p);
}

bool parse_int64(std::string_view text, std::int64_t& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_mpz(std::string_view text, mpz_class& out) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (s.size() == start) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return out.set_str(s, 10) == 0;
}

}  // namespace

bool is_prime_number(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p > kMaxPrime) {
    throw UsageError("modulus " + std::to_string(p) + " exceeds the supported maximum");
  }
  if (!is_prime_number(p)) {
    throw UsageError("modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational") return rational();
  if (text.size() > 2 && text.substr(0, 2) == "p:") {
    std::int64_t p = 0;
    if (!parse_int64(text.substr(2), p)) {
      throw ParseError("invalid field modulus in '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw ParseError("invalid field '" + std::string(text) + "' (expected p:<prime> or rational)");
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "p:" + std::to_string(p_) : "rational";
}

std::int64_t characteristic(const FieldSpec& spec) noexcept { return spec.modulus(); }

Scalar::Scalar(const FieldSpec& field, std::int64_t value) : field_(field) {
  if (field.is_prime()) {
    value_ = reduce(value, field.modulus());
  } else {
    value_ = mpq_class(mpz_class(static_cast<long>(value)));
  }
}

Scalar::Scalar(const FieldSpec& field, mpq_class value) : field_(field) {
  if (!field.is_rational()) {
    throw UsageError("fraction given for prime field " + field.to_string());
  }
  value.canonicalize();
  value_ = std::move(value);
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  if (field.is_prime()) {
    std::int64_t v = 0;
    if (!parse_int64(text, v)) {
      throw ParseError("invalid residue '" + std::string(text) + "'");
    }
    return Scalar(field, v);
  }
  auto slash = text.find('/');
  mpz_class num, den(1);
  if (!parse_mpz(text.substr(0, slash), num) ||
      (slash != std::string_view::npos && !parse_mpz(text.substr(slash + 1), den))) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Scalar(field, mpq_class(num, den));
}

bool Scalar::is_zero() const noexcept {
  if (auto* r = std::get_if<std::int64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto* r = std::get_if<std::int64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::int64_t Scalar::residue() const {
  if (!field_.is_prime()) throw UsageError("residue() on a rational scalar");
  return std::get<std::int64_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw UsageError("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<std::int64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw UsageError("field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<std::int64_t>(&out.value_)) {
    *r = *r == 0 ? 0 : field_.modulus() - *r;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<std::int64_t>(&value_)) {
    *r += std::get<std::int64_t>(rhs.value_);
    if (*r >= field_.modulus()) *r -= field_.modulus();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<std::int64_t>(&value_)) {
    *r -= std::get<std::int64_t>(rhs.value_);
    if (*r < 0) *r += field_.modulus();
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<std::int64_t>(&value_)) {
    *r = (*r * std::get<std::int64_t>(rhs.value_)) % field_.modulus();
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

std::optional<Scalar> Scalar::try_inverse() const {
  if (is_zero()) return std::nullopt;
  Scalar out = *this;
  if (auto* r = std::get_if<std::int64_t>(&out.value_)) {
    *r = inverse_mod(*r, field_.modulus());
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
    q.canonicalize();
  }
  return out;
}

Scalar Scalar::inverse() const {
  auto out = try_inverse();
  if (!out) throw DivisionByZero();
  return *std::move(out);
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = a.field_.modulus() <=> b.field_.modulus(); c != 0) return c;
  if (auto* r = std::get_if<std::int64_t>(&a.value_)) {
    return *r <=> std::get<std::int64_t>(b.value_);
  }
  int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar neg(const Scalar& a) { return -a; }
Scalar inv(const Scalar& a) { return a.inverse(); }

std::vector<Scalar> enumerate_field(const FieldSpec& spec) {
  if (!spec.is_finite()) {
    throw UnsupportedEnumeration("cannot enumerate the rational field");
  }
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(spec.modulus()));
  for (std::int64_t r = 0; r < spec.modulus(); ++r) out.emplace_back(spec, r);
  return out;
}

}  // namespace ternions
