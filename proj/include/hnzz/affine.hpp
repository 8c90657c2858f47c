#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hnzz/hn.hpp"
#include "hnzz/quiver.hpp"
#include "hnzz/zigzag.hpp"

namespace hnzz {

enum class Orientation { cw, ccw };

/// Acyclic orientation of the n-cycle. Edge e_i joins x_{(i-1) mod n} and
/// x_i; cw means it points from x_{(i-1) mod n} to x_i.
struct AffineQuiver {
  std::size_t n = 0;
  std::vector<Orientation> orientation;

  /// Throws InvalidArgument for n < 2, a length mismatch, or a cyclic
  /// (all-cw or all-ccw) orientation.
  AffineQuiver(std::size_t n, std::vector<Orientation> orientation);

  Edge edge(std::size_t i) const;
  bool operator==(const AffineQuiver&) const = default;
};

Quiver to_quiver(const AffineQuiver& aq);

/// Dimension vector of N[u,v]: l+1 on the r residues u, ..., u+r-1 and l
/// elsewhere, where l = floor((v-u)/n) and r = (v-u) mod n + 1.
std::vector<std::size_t> dimvec_N(const AffineQuiver& aq, std::size_t u, std::size_t v);

/// The wrapped interval N[u,v], 0 <= u < n, v >= u. At each vertex the basis
/// runs from the newest translate to the oldest: crossing e_u adds a new
/// first coordinate, crossing e_{v+1} drops the last one. Counterclockwise
/// edges carry the transposed matrix.
Representation indec_N(const AffineQuiver& aq, std::size_t u, std::size_t v, const Field& field);

/// T[lambda; w]: K^w everywhere, the Jordan block J_w(lambda) on e_0 and
/// identities elsewhere.
Representation indec_T(const AffineQuiver& aq, const Scalar& lambda, std::size_t w);

/// [e_{u'} points into x_{u'}] + [e_{v'+1} points into x_{v'}].
int p_value(const AffineQuiver& aq, std::size_t u, std::size_t v);

/// (1 - p) / (v - u + 1), the Euler slope of N[u,v].
Rational euler_slope_N(const AffineQuiver& aq, std::size_t u, std::size_t v);

/// Lift positions 0..D; position i sits over x_{i mod n} at level i / n.
struct LiftWindow {
  std::size_t D = 0;
  std::pair<std::size_t, std::size_t> rho(std::size_t i, std::size_t n) const { return {i % n, i / n}; }
};

/// Throws InvalidArgument unless D is a multiple of n and at least 2n.
void require_window(const AffineQuiver& aq, const LiftWindow& w);

/// D = (dim V_{x_0} + 2) n.
LiftWindow default_window(const AffineQuiver& aq, const Representation& v);

/// Restriction of the lift to positions 0..D: a path quiver whose edge
/// a_i (index i-1) joins y_{i-1} and y_i and carries V_{e_{i mod n}}, pointing
/// y_{i-1} -> y_i when e_{i mod n} is cw.
Representation lift_truncated(const AffineQuiver& aq, const Representation& v, const LiftWindow& w);

/// Class of a wrapped interval: start residue and length v - u.
struct NClass {
  std::size_t u;
  std::size_t len;
  auto operator<=>(const NClass&) const = default;
};

struct LiftedMultiplicities {
  std::size_t d_inf = 0;
  std::map<NClass, std::size_t> classes;
  Barcode barcode;  // of the truncated lift
  LiftWindow window;
  bool operator==(const LiftedMultiplicities&) const = default;
};

/// Reads N and T multiplicities off the barcode of the truncated lift: the
/// full window counts T summands, and bars starting at 1..n that end before
/// D give one class each. Uses the default window when none is given; a
/// given window too short for some wrapped interval throws InvalidArgument.
LiftedMultiplicities lifted_multiplicities(const AffineQuiver& aq, const Representation& v);
LiftedMultiplicities lifted_multiplicities(const AffineQuiver& aq, const Representation& v, const LiftWindow& w);

/// Euler HN quotients assembled from the lifted multiplicities.
HNReport eta_from_lift(const AffineQuiver& aq, const Representation& v);
HNReport eta_from_lifted(const AffineQuiver& aq, const LiftedMultiplicities& m);

/// Multiplicity of N[u,v] read from an Euler HN report; p_value must not
/// be 1.
std::size_t recover_N_multiplicities(const AffineQuiver& aq, const HNReport& rep, std::size_t u, std::size_t v);

}  // namespace hnzz
