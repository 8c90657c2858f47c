#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hnzz {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// num / den in lowest terms. Throws InvalidArgument when den is zero.
Rational make_rational(long num, long den);

/// Parses "a/b" or "a" (optional leading minus). Throws InvalidArgument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a/b", or "a" when the denominator is one.
std::string to_string(const Rational& q);

/// The ground field: either the rationals or a prime field GF(p), p < 2^31.
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rational() { return Field(Kind::rational, 0); }
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  bool is_prime() const { return kind_ == Kind::prime; }
  /// Characteristic for GF(p); zero for the rationals.
  std::uint32_t modulus() const { return p_; }

  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

/// A single field element. Arithmetic between scalars of different fields
/// throws InvalidArgument.
class Scalar {
 public:
  /// Zero of the given field.
  explicit Scalar(Field field);
  Scalar(Field field, long value);
  Scalar(Field field, const Rational& value);

  static Scalar from_residue(Field field, std::uint32_t residue);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; for prime fields the residue as an integer.
  Rational to_rational() const;
  /// Residue in [0, p). Only valid for prime fields.
  std::uint32_t residue() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  Field field_;
  std::variant<Rational, std::uint32_t> value_;
};

}  // namespace hnzz
