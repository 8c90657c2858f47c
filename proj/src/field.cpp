#include "hnzz/field.hpp"

#include <cctype>

#include "field_ops.hpp"
#include "hnzz/error.hpp"

namespace hnzz {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p > (1u << 31) || !is_prime_number(p))
    throw InvalidArgument("GF(p) requires a prime p <= 2^31, got " + std::to_string(p));
  return Field(Kind::prime, p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field field) : field_(field) {
  if (field_.is_rational())
    value_ = Rational(0);
  else
    value_ = std::uint32_t{0};
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field_.is_rational()) {
    value_ = Rational(value);
  } else {
    long p = static_cast<long>(field_.modulus());
    long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(Field field, const Rational& value) : field_(field) {
  if (field_.is_rational()) {
    value_ = value;
    return;
  }
  mpz_class p(field_.modulus());
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (den == 0) throw InvalidArgument(hnzz::to_string(value) + " has no image in " + field_.name());
  if (num < 0) num += p;
  detail::PrimeOps ops{field_.modulus()};
  auto n = static_cast<std::uint32_t>(num.get_ui());
  auto d = static_cast<std::uint32_t>(den.get_ui());
  value_ = ops.mul(n, ops.inv(d));
}

Scalar Scalar::from_residue(Field field, std::uint32_t residue) {
  if (!field.is_prime() || residue >= field.modulus())
    throw InvalidArgument("residue " + std::to_string(residue) + " out of range for " + field.name());
  Scalar s(field);
  s.value_ = residue;
  return s;
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<Rational>(&value_)) return *q == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

Rational Scalar::to_rational() const {
  if (auto* q = std::get_if<Rational>(&value_)) return *q;
  return Rational(static_cast<unsigned long>(std::get<std::uint32_t>(value_)));
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_prime()) throw InvalidArgument("residue() requires a prime field");
  return std::get<std::uint32_t>(value_);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw InvalidArgument("mixed-field arithmetic: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar r(field_);
  if (field_.is_rational())
    r.value_ = std::get<Rational>(value_) + std::get<Rational>(o.value_);
  else
    r.value_ = detail::PrimeOps{field_.modulus()}.add(std::get<std::uint32_t>(value_), std::get<std::uint32_t>(o.value_));
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  Scalar r(field_);
  if (field_.is_rational())
    r.value_ = std::get<Rational>(value_) - std::get<Rational>(o.value_);
  else
    r.value_ = detail::PrimeOps{field_.modulus()}.sub(std::get<std::uint32_t>(value_), std::get<std::uint32_t>(o.value_));
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar r(field_);
  if (field_.is_rational())
    r.value_ = Rational(std::get<Rational>(value_) * std::get<Rational>(o.value_));
  else
    r.value_ = detail::PrimeOps{field_.modulus()}.mul(std::get<std::uint32_t>(value_), std::get<std::uint32_t>(o.value_));
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  Scalar r(field_);
  if (field_.is_rational())
    r.value_ = Rational(1 / std::get<Rational>(value_));
  else
    r.value_ = detail::PrimeOps{field_.modulus()}.inv(std::get<std::uint32_t>(value_));
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const { return Scalar(field_) - *this; }

bool Scalar::operator==(const Scalar& o) const { return field_ == o.field_ && value_ == o.value_; }

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<Rational>(&value_)) return hnzz::to_string(*q);
  return std::to_string(std::get<std::uint32_t>(value_));
}

}  // namespace hnzz
