#include <doctest.h>

#include "helpers.hpp"
#include "uslev/checks.hpp"
#include "uslev/norms.hpp"
#include "uslev/sampling.hpp"

using namespace uslev;

TEST_CASE("gauge of a shifted cone") {
  const SetExpr s = SetExpr::shift(V({1, 1}), nonpos(2));
  CHECK(minkowski_eval(s, V({0.5, -7})).value() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(minkowski_eval(s, V({-1, -1})).value() == 0.0);
  CHECK(minkowski_eval(s, V({2, 1})).value() == doctest::Approx(2).epsilon(1e-9));
  CHECK_THROWS_WITH_AS(minkowski_eval(SetExpr::shift(V({-1, -1}), nonpos(2)), V({1, 1})),
                       doctest::Contains("gauge undefined here"), InputError);
}

TEST_CASE("order unit norm on the orthant is the max norm") {
  const OrderUnitSpec spec = OrderUnitSpec::make(nonneg(2), V({1, 1}));
  CHECK(order_unit_norm(spec, V({1, -2})) == doctest::Approx(2));
  CHECK(order_unit_norm(spec, V({0, 0})) == 0.0);
  CHECK(order_unit_norm(spec, V({3, 3})) == doctest::Approx(3));
  const SetExpr interval = order_interval(nonneg(2), V({1, 1}));
  CHECK(minkowski_eval(interval, V({1, -2})).value() == doctest::Approx(2).epsilon(1e-9));
}

TEST_CASE("order unit norm equals the gauge of the order interval") {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const std::size_t dim = 2 + i % 3;
    const SetExpr c = random_pointed_cone(dim, rng);
    const Vector k = Vector::Ones(static_cast<Eigen::Index>(dim));
    const OrderUnitSpec spec = OrderUnitSpec::make(c, k);
    const SetExpr interval = order_interval(c, k);
    for (int j = 0; j < 10; ++j) {
      const Vector y = box_source(dim, 4)(rng);
      const double n = order_unit_norm(spec, y);
      CHECK(std::abs(n - minkowski_eval(interval, y).value()) <= 1e-8 * (1 + n));
      CHECK(std::abs(order_unit_norm(spec, Vector(-y)) - n) <= 1e-12 * (1 + n));
    }
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_WITH_AS(OrderUnitSpec::make(SetExpr::halfspaces(M({{1, 1}}), V({0})), V({-1, -1})),
                       doctest::Contains("not pointed"), Refusal);
  CHECK_THROWS_WITH_AS(OrderUnitSpec::make(nonneg(2), V({1, 0})), doctest::Contains("core"), Refusal);
  CHECK_THROWS_AS(OrderUnitSpec::make(SetExpr::shift(V({1, 1}), nonneg(2)), V({2, 2})), Refusal);
}

TEST_CASE("norm and phi coincide on a + C") {
  const OrderUnitSpec spec = OrderUnitSpec::make(nonneg(2), V({1, 1}));
  const Vector a = V({-1, -1});
  std::vector<Vector> ys{V({1, 1}), a};
  CoincidenceReport r = norm_phi_coincidence_check(spec, a, ys);
  CHECK(r.passed);
  CHECK(r.max_diff == 0.0);
  CHECK(order_unit_norm(spec, Vector(ys[0] - a)) == doctest::Approx(2));

  Rng rng(32);
  ys.clear();
  for (const Vector& d : SetSampler(nonneg(2)).draw_n(rng, 1000)) ys.push_back(a + d);
  r = norm_phi_coincidence_check(spec, a, ys);
  CHECK(r.samples == 1000);
  CHECK(r.max_diff <= 1e-9);

  // off a + C the identity fails
  const std::vector<Vector> off{V({-2, -3})};
  CHECK_FALSE(norm_phi_coincidence_check(spec, a, off).passed);
}

TEST_CASE("norm axioms on random pointed cones") {
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const std::size_t dim = 2 + i % 3;
    const OrderUnitSpec spec =
        OrderUnitSpec::make(random_pointed_cone(dim, rng), Vector::Ones(static_cast<Eigen::Index>(dim)));
    const Vector y = box_source(dim, 5)(rng), z = box_source(dim, 5)(rng);
    const double ny = order_unit_norm(spec, y), nz = order_unit_norm(spec, z);
    CHECK(order_unit_norm(spec, Vector(y + z)) <= ny + nz + 1e-9);
    CHECK(std::abs(order_unit_norm(spec, Vector(-3.5 * y)) - 3.5 * ny) <= 1e-9 * (1 + ny));
    CHECK(ny > 0.0);
  }
}
