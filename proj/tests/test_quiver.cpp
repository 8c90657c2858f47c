#include <doctest.h>

#include <algorithm>

#include "hnzz/affine.hpp"
#include "hnzz/error.hpp"
#include "hnzz/generate.hpp"
#include "hnzz/linalg.hpp"
#include "hnzz/zigzag.hpp"
#include "oracles.hpp"

using namespace hnzz;

namespace {

const Field Q = Field::rational();
const Field GF2 = Field::prime(2);
const Field GF3 = Field::prime(3);
const Field GF5 = Field::prime(5);

AffineQuiver example_quiver() {
  using O = Orientation;
  return AffineQuiver(6, {O::cw, O::cw, O::cw, O::ccw, O::cw, O::cw});
}

std::vector<long> as_longs(const StabilityCondition& s) {
  std::vector<long> out;
  for (const auto& w : s.weights) out.push_back(w.get_num().get_si());
  return out;
}

}  // namespace

TEST_CASE("is_acyclic") {
  CHECK(is_acyclic(Quiver::equioriented(3)));
  CHECK_FALSE(is_acyclic(Quiver(2, {{0, 1}, {1, 0}})));
  CHECK(is_acyclic(to_quiver(example_quiver())));
  CHECK_FALSE(is_acyclic(Quiver(1, {{0, 0}})));
  CHECK_THROWS_AS(Quiver(2, {{0, 2}}), InvalidArgument);
}

TEST_CASE("path_layout") {
  CHECK(path_layout(Quiver(3, {{2, 1}, {0, 1}})).has_value());
  auto layout = *path_layout(Quiver(3, {{2, 1}, {0, 1}}));
  CHECK(layout[0].edge == 1);
  CHECK(layout[0].direction == PathDirection::forward);
  CHECK(layout[1].edge == 0);
  CHECK(layout[1].direction == PathDirection::backward);
  CHECK_FALSE(path_layout(Quiver(3, {{0, 2}, {1, 2}})).has_value());
  CHECK_FALSE(path_layout(to_quiver(example_quiver())).has_value());
  CHECK(is_equioriented_path(Quiver::equioriented(4)));
  CHECK_FALSE(is_equioriented_path(Quiver(2, {{1, 0}})));
}

TEST_CASE("validate") {
  Quiver a2 = Quiver::equioriented(2);
  CHECK(validate(interval_module(a2, {0, 1}, Q)).empty());

  Representation bad_shape = interval_module(a2, {0, 1}, Q);
  bad_shape.mats[0] = Matrix(Q, 2, 1);
  auto v1 = validate(bad_shape);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].kind == Violation::Kind::shape);
  CHECK(v1[0].message.find("edge 0") != std::string::npos);

  Representation bad_field = interval_module(a2, {0, 1}, GF3);
  bad_field.mats[0] = Matrix::identity(GF2, 1);
  auto v2 = validate(bad_field);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].kind == Violation::Kind::field);

  Representation bad_count = interval_module(a2, {0, 1}, Q);
  bad_count.mats.clear();
  CHECK(validate(bad_count).at(0).kind == Violation::Kind::count);
}

TEST_CASE("direct_sum") {
  Quiver a2 = Quiver::equioriented(2);
  Representation v = interval_module(a2, {0, 1}, Q);
  CHECK(direct_sum(v, Representation::zero(a2, Q)) == v);

  Representation s = direct_sum(interval_module(a2, {0, 0}, Q), interval_module(a2, {1, 1}, Q));
  CHECK(s.dims == std::vector<std::size_t>{1, 1});
  CHECK(s.mats[0] == Matrix(Q, 1, 1));

  Representation a{a2, Q, {1, 2}, {Matrix::from_ints(Q, {{1}, {0}})}};
  Representation b{a2, Q, {2, 1}, {Matrix::from_ints(Q, {{1, 1}})}};
  Representation ab = direct_sum(a, b);
  CHECK(ab.dims == std::vector<std::size_t>{3, 3});
  CHECK(ab.mats[0] == Matrix::from_ints(Q, {{1, 0, 0}, {0, 0, 0}, {0, 1, 1}}));

  CHECK_THROWS_AS(direct_sum(v, interval_module(a2, {0, 1}, GF2)), InvalidArgument);
  CHECK_THROWS_AS(direct_sum(v, interval_module(Quiver(2, {{1, 0}}), {0, 1}, Q)), InvalidArgument);
}

TEST_CASE("conjugate") {
  Quiver a2 = Quiver::equioriented(2);
  Representation v = interval_module(a2, {0, 1}, GF5);
  std::vector<Matrix> ids{Matrix::identity(GF5, 1), Matrix::identity(GF5, 1)};
  CHECK(conjugate(v, ids) == v);

  Representation z = Representation::zero(a2, GF5);
  std::vector<Matrix> empty{Matrix(GF5, 0, 0), Matrix(GF5, 0, 0)};
  CHECK(conjugate(z, empty) == z);

  std::vector<Matrix> b{Matrix::from_ints(GF5, {{2}}), Matrix::from_ints(GF5, {{3}})};
  CHECK(conjugate(v, b).mats[0] == Matrix::from_ints(GF5, {{4}}));

  std::vector<Matrix> singular{Matrix::from_ints(GF5, {{0}}), Matrix::from_ints(GF5, {{1}})};
  CHECK_THROWS_AS(conjugate(v, singular), InvalidArgument);
}

TEST_CASE("restrict_to") {
  Quiver a3 = Quiver::equioriented(3);
  Representation v = direct_sum(interval_module(a3, {0, 2}, Q), interval_module(a3, {1, 2}, Q));
  std::vector<std::size_t> all{0, 1, 2};
  CHECK(restrict_to(v, all) == v);

  std::vector<std::size_t> none;
  Representation e = restrict_to(v, none);
  CHECK(e.quiver.vertex_count() == 0);
  CHECK(e.mats.empty());

  std::vector<std::size_t> suffix{1, 2};
  Representation t = restrict_to(v, suffix);
  CHECK(t.dims == std::vector<std::size_t>{2, 2});
  CHECK(t.quiver == Quiver::equioriented(2));
  CHECK(t.mats[0] == v.mats[1]);
}

TEST_CASE("slope and Euler stability") {
  Quiver a3 = Quiver::equioriented(3);
  StabilityCondition eps = euler_stability(a3);
  CHECK(as_longs(eps) == std::vector<long>{1, 0, 0});
  CHECK(slope(interval_module(a3, {0, 2}, Q), eps) == Rational(1, 3));
  CHECK(slope(interval_module(a3, {1, 2}, Q), eps) == 0);
  StabilityCondition zero{{0, 0, 0}};
  CHECK(slope(interval_module(a3, {0, 1}, Q), zero) == 0);
  CHECK_THROWS_AS(slope(Representation::zero(a3, Q), eps), InvalidArgument);

  CHECK(as_longs(euler_stability(to_quiver(example_quiver()))) == std::vector<long>{0, 0, -1, 1, 0, 0});
  CHECK(as_longs(euler_stability(Quiver(3, {{0, 1}, {0, 2}}))).at(0) == 1);
  CHECK_THROWS_AS(euler_stability(Quiver(2, {{0, 1}, {1, 0}})), InvalidArgument);
}

TEST_CASE("sheaf Euler characteristic") {
  Quiver a3 = Quiver::equioriented(3);
  CHECK(sheaf_euler_characteristic(interval_module(a3, {0, 2}, Q)) == 1);
  CHECK(sheaf_euler_characteristic(indec_T(example_quiver(), Scalar(Q, 2), 3)) == 0);
  CHECK(sheaf_euler_characteristic(Representation::zero(a3, Q)) == 0);
}

TEST_CASE("slope properties on random modules") {
  Rng rng(2024);
  for (int t = 0; t < 100; ++t) {
    PersistenceParams params;
    params.n = rng.between(1, 5);
    params.field = t % 2 ? GF3 : Q;
    params.zigzag = true;
    GeneratedPersistence u = generate_persistence(params, rng);
    PersistenceParams same = params;
    Rng rng2(rng.next());
    GeneratedPersistence w = generate_persistence(same, rng2);
    // Put w on u's quiver: rebuild it from its barcode there.
    Representation w_on_u = oracle::sum_of_intervals(u.rep.quiver, w.truth, params.field);
    if (u.rep.is_zero() || w_on_u.is_zero()) continue;

    StabilityCondition alpha;
    for (std::size_t x = 0; x < params.n; ++x) alpha.weights.push_back(make_rational(rng.between(-3, 3), rng.between(1, 4)));
    Rational su = slope(u.rep, alpha), sw = slope(w_on_u, alpha), ss = slope(direct_sum(u.rep, w_on_u), alpha);
    CHECK(std::min(su, sw) <= ss);
    CHECK(ss <= std::max(su, sw));

    std::vector<Matrix> basis;
    for (auto d : u.rep.dims) basis.push_back(random_invertible(d, params.field, rng));
    CHECK(slope(conjugate(u.rep, basis), alpha) == su);

    CHECK(sheaf_euler_characteristic(direct_sum(u.rep, w_on_u)) ==
          sheaf_euler_characteristic(u.rep) + sheaf_euler_characteristic(w_on_u));
    std::vector<std::size_t> all(params.n);
    for (std::size_t x = 0; x < params.n; ++x) all[x] = x;
    CHECK(restrict_to(u.rep, all) == u.rep);
  }
}

TEST_CASE("Euler weights sum to vertices minus edges") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<Orientation> o;
      for (std::size_t i = 0; i < n; ++i) o.push_back(mask >> i & 1 ? Orientation::ccw : Orientation::cw);
      StabilityCondition eps = euler_stability(to_quiver(AffineQuiver(n, o)));
      Rational sum(0);
      for (const auto& w : eps.weights) sum += w;
      CHECK(sum == 0);
    }
  StabilityCondition eps = euler_stability(Quiver::equioriented(4));
  Rational sum(0);
  for (const auto& w : eps.weights) sum += w;
  CHECK(sum == 1);
}
