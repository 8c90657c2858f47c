#include <doctest.h>

#include "hnzz/error.hpp"
#include "hnzz/generate.hpp"
#include "hnzz/linalg.hpp"
#include "hnzz/zigzag.hpp"
#include "oracles.hpp"

using namespace hnzz;

namespace {

const Field Q = Field::rational();
const Field GF5 = Field::prime(5);

Representation conjugated(const Representation& v, Rng& rng) {
  std::vector<Matrix> basis;
  for (auto d : v.dims) basis.push_back(random_invertible(d, v.field, rng));
  return conjugate(v, basis);
}

}  // namespace

TEST_CASE("interval_module") {
  Quiver a3 = Quiver::equioriented(3);
  Representation full = interval_module(a3, {0, 2}, Q);
  CHECK(full.dims == std::vector<std::size_t>{1, 1, 1});
  for (const auto& m : full.mats) CHECK(m.is_identity());

  CHECK(interval_module(Quiver::equioriented(4), {2, 2}, Q).dims == std::vector<std::size_t>{0, 0, 1, 0});

  Representation i01 = interval_module(a3, {0, 1}, Q);
  CHECK(i01.dims == std::vector<std::size_t>{1, 1, 0});
  CHECK(i01.mats[0].is_identity());
  CHECK(i01.mats[1].rows() == 0);
  CHECK(i01.mats[1].cols() == 1);

  Quiver zz(3, {{1, 0}, {1, 2}});
  Representation z = interval_module(zz, {0, 1}, Q);
  CHECK(z.mats[0].is_identity());
  CHECK(z.mats[1].rows() == 0);

  CHECK_THROWS_AS(interval_module(a3, {1, 3}, Q), InvalidArgument);
  CHECK_THROWS_AS(interval_module(Quiver(3, {{0, 1}, {0, 2}}), {0, 0}, Q), InvalidArgument);
}

TEST_CASE("generalized_rank") {
  Quiver zz(4, {{0, 1}, {2, 1}, {2, 3}});
  Representation v = interval_module(zz, {1, 3}, Q);
  CHECK(generalized_rank(v, {1, 3}) == 1);
  CHECK(generalized_rank(v, {2, 2}) == 1);
  CHECK(generalized_rank(v, {0, 2}) == 0);
  CHECK(generalized_rank(v, {0, 0}) == 0);

  Quiver a3 = Quiver::equioriented(3);
  Representation s = direct_sum(interval_module(a3, {0, 2}, Q), interval_module(a3, {1, 1}, Q));
  CHECK(generalized_rank(s, {1, 1}) == 2);
  CHECK(generalized_rank(s, {0, 1}) == 1);
  CHECK_THROWS_AS(generalized_rank(s, {2, 3}), InvalidArgument);
}

TEST_CASE("barcode examples") {
  Quiver a2 = Quiver::equioriented(2);
  Representation zero_map{a2, Q, {1, 1}, {Matrix(Q, 1, 1)}};
  CHECK(barcode(zero_map) == Barcode{{{0, 0}, 1}, {{1, 1}, 1}});
  Representation id_map{a2, Q, {1, 1}, {Matrix::identity(Q, 1)}};
  CHECK(barcode(id_map) == Barcode{{{0, 1}, 1}});

  Quiver a3 = Quiver::equioriented(3);
  Barcode truth{{{0, 2}, 1}, {{0, 0}, 1}, {{1, 2}, 1}};
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    Representation v = conjugated(oracle::sum_of_intervals(a3, truth, GF5), rng);
    CHECK(barcode(v) == truth);
    CHECK(barcode_by_ranks(v) == truth);
  }
}

TEST_CASE("a bar born at a backward edge can be absorbed by an older bar") {
  // K --id--> K <--(1 0)-- K^2 --(1 1)--> K
  Quiver q(4, {{0, 1}, {2, 1}, {2, 3}});
  Representation v{q, Q, {1, 1, 2, 1},
                   {Matrix::identity(Q, 1), Matrix::from_ints(Q, {{1, 0}}), Matrix::from_ints(Q, {{1, 1}})}};
  Barcode expected{{{0, 2}, 1}, {{2, 3}, 1}};
  CHECK(barcode(v) == expected);
  CHECK(barcode_by_ranks(v) == expected);
}

TEST_CASE("edge list order does not matter") {
  Quiver q(3, {{2, 1}, {0, 1}});
  Representation v{q, Q, {1, 1, 1}, {Matrix::identity(Q, 1), Matrix(Q, 1, 1)}};
  CHECK(barcode(v) == Barcode{{{0, 0}, 1}, {{1, 2}, 1}});
}

TEST_CASE("reconstruction from random conjugated interval sums") {
  Rng rng(77);
  for (int t = 0; t < 300; ++t) {
    PersistenceParams params;
    params.n = rng.between(1, 7);
    params.field = std::vector<Field>{Q, Field::prime(2), Field::prime(3), GF5}[t % 4];
    params.max_summands = 6;
    params.max_total_dim = 0;
    params.max_vertex_dim = 0;
    params.zigzag = true;
    GeneratedPersistence g = generate_persistence(params, rng);
    Barcode fast = barcode(g.rep);
    CHECK(fast == g.truth);
    CHECK(barcode_dims(fast, params.n) == g.rep.dims);
    if (params.n <= 5) CHECK(barcode_by_ranks(g.rep) == g.truth);
  }
}

TEST_CASE("barcode is invariant under change of basis") {
  Rng rng(909);
  for (int t = 0; t < 220; ++t) {
    PersistenceParams params;
    params.n = rng.between(2, 6);
    params.field = t % 2 ? Field::prime(3) : Q;
    params.max_summands = 5;
    params.max_total_dim = 0;
    params.zigzag = true;
    GeneratedPersistence g = generate_persistence(params, rng);
    CHECK(barcode(conjugated(g.rep, rng)) == barcode(g.rep));
  }
}

TEST_CASE("equioriented barcode agrees with composite-map persistence") {
  Rng rng(31337);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = rng.between(1, 6);
    Field f = t % 2 ? Field::prime(2) : Q;
    Representation v{Quiver::equioriented(n), f, {}, {}};
    for (std::size_t x = 0; x < n; ++x) v.dims.push_back(rng.below(4));
    for (std::size_t x = 0; x + 1 < n; ++x) {
      Matrix m(f, v.dims[x + 1], v.dims[x]);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          m.set(r, c, f.is_rational() ? rng.between(-1, 1) * static_cast<long>(rng.below(2)) : rng.below(2));
      v.mats.push_back(m);
    }
    Barcode expected = oracle::persistence_barcode(v);
    CHECK(barcode(v) == expected);
    CHECK(barcode_by_ranks(v) == expected);
  }
}

TEST_CASE("random zigzag matrices: sweep and rank routes agree") {
  Rng rng(4242);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = rng.between(1, 5);
    Field f = t % 3 == 0 ? Q : Field::prime(t % 3 == 1 ? 2 : 3);
    std::vector<PathDirection> dirs;
    for (std::size_t i = 0; i + 1 < n; ++i) dirs.push_back(rng.chance(1, 2) ? PathDirection::forward : PathDirection::backward);
    Representation v{path_quiver(dirs), f, {}, {}};
    for (std::size_t x = 0; x < n; ++x) v.dims.push_back(rng.below(4));
    for (const auto& e : v.quiver.edges()) {
      Matrix m(f, v.dims[e.dst], v.dims[e.src]);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, static_cast<long>(rng.below(3)) - 1);
      v.mats.push_back(m);
    }
    Barcode fast = barcode(v);
    CHECK(fast == barcode_by_ranks(v));
    CHECK(barcode_dims(fast, n) == v.dims);
  }
}

TEST_CASE("barcode rejects non-path quivers") {
  Representation v = Representation::zero(Quiver(3, {{0, 1}, {0, 2}}), Q);
  CHECK_THROWS_AS(barcode(v), InvalidArgument);
  CHECK(barcode(Representation::zero(Quiver::equioriented(3), Q)).empty());
}
