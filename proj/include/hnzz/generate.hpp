#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hnzz/affine.hpp"
#include "hnzz/rng.hpp"
#include "hnzz/zigzag.hpp"

namespace hnzz {

struct PersistenceParams {
  std::size_t n = 3;
  Field field = Field::prime(2);
  std::size_t max_summands = 4;
  std::size_t max_total_dim = 8;   // 0: unbounded
  std::size_t max_vertex_dim = 6;  // 0: unbounded
  /// Random edge directions instead of i -> i+1.
  bool zigzag = false;
};

struct GeneratedPersistence {
  Representation rep;
  Barcode truth;
};

/// Direct sum of random interval modules, conjugated by random bases.
/// Intervals that would break a dimension bound are skipped.
GeneratedPersistence generate_persistence(const PersistenceParams& params, Rng& rng);

struct TubeSummand {
  Scalar lambda;
  std::size_t w;
};

struct AffineTruth {
  std::map<NClass, std::size_t> classes;
  std::vector<TubeSummand> tubes;

  /// Sum of the tube widths.
  std::size_t d_inf() const;
};

struct AffineParams {
  std::size_t n = 4;
  Field field = Field::prime(2);
  std::size_t max_summands = 3;
  std::size_t max_total_dim = 0;   // 0: unbounded
  std::size_t max_vertex_dim = 0;  // 0: unbounded
  /// Random acyclic orientation when absent.
  std::optional<AffineQuiver> quiver;
};

struct GeneratedAffine {
  AffineQuiver quiver;
  Representation rep;
  AffineTruth truth;
};

/// Direct sum of N[u,v] (probability 2/3, v - u < 3n) and T[lambda;w]
/// (w in {1,2}, lambda a random nonzero field element; +-1..+-3 over Q),
/// conjugated by random bases.
GeneratedAffine generate_affine(const AffineParams& params, Rng& rng);

/// Uniformly random orientation that is not a directed cycle.
AffineQuiver random_affine_quiver(std::size_t n, Rng& rng);

}  // namespace hnzz
