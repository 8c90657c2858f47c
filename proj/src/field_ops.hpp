#pragma once

// Element-level arithmetic policies used by the dense kernels. Each policy
// exposes the element type and the handful of operations Gauss-Jordan needs.

#include <cstdint>

#include "hnzz/field.hpp"

namespace hnzz::detail {

struct PrimeOps {
  using T = std::uint32_t;
  std::uint64_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { return static_cast<T>((std::uint64_t{a} + b) % p); }
  T sub(T a, T b) const { return static_cast<T>((std::uint64_t{a} + p - b) % p); }
  T mul(T a, T b) const { return static_cast<T>((std::uint64_t{a} * b) % p); }
  T neg(T a) const { return a == 0 ? 0 : static_cast<T>(p - a); }
  T inv(T a) const {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<T>(result);
  }
  // a - b*c
  T sub_mul(T a, T b, T c) const { return sub(a, mul(b, c)); }
};

struct RationalOps {
  using T = Rational;

  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
  T sub_mul(const T& a, const T& b, const T& c) const { return a - b * c; }
};

}  // namespace hnzz::detail
