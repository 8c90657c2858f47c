#pragma once

#include <compare>
#include <cstddef>
#include <map>

#include "hnzz/field.hpp"
#include "hnzz/quiver.hpp"

namespace hnzz {

/// Closed integer interval [lo, hi] of path vertices.
struct Interval {
  std::size_t lo;
  std::size_t hi;
  auto operator<=>(const Interval&) const = default;
  bool contains(std::size_t x) const { return lo <= x && x <= hi; }
};

/// Interval -> multiplicity; every stored multiplicity is positive.
using Barcode = std::map<Interval, std::size_t>;

/// I[lo,hi] on a path quiver: K on [lo,hi], identities between two
/// supported vertices, zero maps elsewhere.
Representation interval_module(const Quiver& q, Interval i, const Field& field);

/// Rank of the canonical map from the limit to the colimit of v restricted
/// to the subpath i.
std::size_t generalized_rank(const Representation& v, Interval i);

/// Interval decomposition by a single left-to-right sweep that maintains a
/// basis compatible with the bars alive at the current vertex.
Barcode barcode(const Representation& v);

/// Interval decomposition by inclusion-exclusion over generalized ranks.
/// Quadratically many rank computations; meant for cross-checking.
Barcode barcode_by_ranks(const Representation& v);

/// Per-vertex dimensions of the direct sum of the barcode's intervals.
std::vector<std::size_t> barcode_dims(const Barcode& bar, std::size_t vertex_count);

}  // namespace hnzz
