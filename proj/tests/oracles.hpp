#pragma once

// Reference computations used only by the tests. They deliberately take
// routes different from the library code they check.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hnzz/affine.hpp"
#include "hnzz/linalg.hpp"
#include "hnzz/zigzag.hpp"

namespace oracle {

/// Number of subspaces of GF(q)^n: the sum over k of the Gaussian binomial
/// coefficients, each from the product formula.
inline std::uint64_t subspace_count(std::size_t n, std::uint64_t q) {
  auto pow = [&](std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= q;
    return r;
  };
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    std::uint64_t num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
      num *= pow(n - i) - 1;
      den *= pow(i + 1) - 1;
    }
    total += num / den;
  }
  return total;
}

/// Classical persistence barcode of an equioriented module: ranks of the
/// composite maps V_b -> V_d, then inclusion-exclusion.
inline hnzz::Barcode persistence_barcode(const hnzz::Representation& v) {
  const std::size_t n = v.quiver.vertex_count();
  auto edge_from = [&](std::size_t i) {
    for (std::size_t e = 0; e < v.quiver.edge_count(); ++e)
      if (v.quiver.edge(e).src == i && v.quiver.edge(e).dst == i + 1) return e;
    throw std::logic_error("not equioriented");
  };
  auto r = [&](long b, long d) -> long {
    if (b < 0 || d >= static_cast<long>(n)) return 0;
    hnzz::Matrix m = hnzz::Matrix::identity(v.field, v.dims[b]);
    for (long i = b; i < d; ++i) m = v.mats[edge_from(i)] * m;
    return static_cast<long>(hnzz::rank(m));
  };
  hnzz::Barcode out;
  for (long b = 0; b < static_cast<long>(n); ++b)
    for (long d = b; d < static_cast<long>(n); ++d) {
      long mult = r(b, d) - r(b - 1, d) - r(b, d + 1) + r(b - 1, d + 1);
      if (mult < 0) throw std::logic_error("negative persistence multiplicity");
      if (mult > 0) out[{static_cast<std::size_t>(b), static_cast<std::size_t>(d)}] = mult;
    }
  return out;
}

/// dim N[u,v] at x: how many integers in [u,v] are congruent to x mod n.
inline std::vector<std::size_t> wrapped_dims(std::size_t n, std::size_t u, std::size_t v) {
  std::vector<std::size_t> dims(n, 0);
  for (std::size_t t = u; t <= v; ++t) ++dims[t % n];
  return dims;
}

/// Barcode of the lift of N[u,v] restricted to 0..D: every translate
/// [u + cn, v + cn] clipped to the window.
inline hnzz::Barcode lift_translates(std::size_t n, std::size_t u, std::size_t v, std::size_t D) {
  hnzz::Barcode out;
  for (long c = -static_cast<long>(v / n) - 1; static_cast<long>(u) + c * static_cast<long>(n) <= static_cast<long>(D); ++c) {
    long lo = static_cast<long>(u) + c * static_cast<long>(n);
    long hi = static_cast<long>(v) + c * static_cast<long>(n);
    if (hi < 0) continue;
    std::size_t a = static_cast<std::size_t>(std::max(lo, 0L));
    std::size_t b = static_cast<std::size_t>(std::min(hi, static_cast<long>(D)));
    ++out[{a, b}];
  }
  return out;
}

/// Sum of (1 - in-degree) * dim over vertices, divided by total dimension,
/// with in-degrees counted from the raw edge list.
inline hnzz::Rational euler_slope(const hnzz::Representation& v) {
  long num = 0, den = 0;
  for (std::size_t x = 0; x < v.dims.size(); ++x) {
    long indeg = 0;
    for (const auto& e : v.quiver.edges()) indeg += e.dst == x;
    num += (1 - indeg) * static_cast<long>(v.dims[x]);
    den += static_cast<long>(v.dims[x]);
  }
  hnzz::Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Direct sum of interval modules with the given multiplicities.
inline hnzz::Representation sum_of_intervals(const hnzz::Quiver& q, const hnzz::Barcode& bar,
                                             const hnzz::Field& field) {
  hnzz::Representation v = hnzz::Representation::zero(q, field);
  for (const auto& [i, mult] : bar)
    for (std::size_t k = 0; k < mult; ++k) v = hnzz::direct_sum(v, hnzz::interval_module(q, i, field));
  return v;
}

}  // namespace oracle
