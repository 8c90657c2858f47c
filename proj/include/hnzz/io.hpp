#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hnzz/affine.hpp"
#include "hnzz/generate.hpp"
#include "hnzz/hn.hpp"
#include "hnzz/zigzag.hpp"

namespace hnzz {

/// A representation read from an instance file. `affine` is set when the
/// file describes its quiver by an affine orientation.
struct Instance {
  Representation rep;
  std::optional<AffineQuiver> affine;
};

/// Throws ParseError for malformed JSON or missing/mistyped keys and
/// InvalidArgument when the parsed data violates a representation invariant.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

struct Report {
  std::optional<Barcode> barcode;
  std::optional<HNReport> hn;
  std::optional<std::size_t> window;
  std::optional<std::size_t> d_inf;
  std::optional<std::map<NClass, std::size_t>> classes;
  std::optional<bool> oracle_agrees;
};

bool operator==(const Report& a, const Report& b);

/// Canonical single-line JSON, newline-terminated. Keys appear in the order
/// barcode, hn, window, d_inf, classes, oracle_agrees; absent fields are
/// omitted.
std::string serialize_report(const Report& report);
Report parse_report(std::string_view text);

/// Ground-truth sidecars written next to generated instances.
std::string serialize_truth(const Barcode& truth);
std::string serialize_truth(const AffineTruth& truth);
Barcode parse_persistence_truth(std::string_view text);
AffineTruth parse_affine_truth(std::string_view text, const Field& field);

}  // namespace hnzz
