#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "uslev/checks.hpp"
#include "uslev/efficiency.hpp"
#include "uslev/order.hpp"
#include "uslev/sampling.hpp"

using namespace uslev;

namespace {
PointCloud example_cloud() { return PointCloud({V({0, 3}), V({1, 1}), V({3, 0}), V({2, 2})}); }
}  // namespace

TEST_CASE("relation_holds") {
  const DominationRelation r{nonneg(2), false};
  CHECK(relation_holds(r, V({1, 1}), V({2, 3})));
  CHECK_FALSE(relation_holds(r, V({1, 1}), V({0, 3})));
  CHECK(relation_holds({SetExpr::shift(V({1, 1}), nonneg(2)), false}, V({0, 0}), V({1, 1})));
  // the phi comparison does not reverse the order: -1 <= 0 yet (-2,0) - (-1,-1) is outside D
  CHECK_FALSE(relation_holds(r, V({-1, -1}), V({-2, 0})));
}

TEST_CASE("relation properties") {
  Rng rng(41);
  const SetExpr d = nonneg(2);
  auto rep = relation_properties({d, false}, SetSampler(d).as_source(), 200, rng);
  CHECK(rep.reflexive.verdict == Verdict::True);
  CHECK(rep.antisymmetric.verdict == Verdict::NotRefuted);
  CHECK(rep.asymmetric.verdict == Verdict::False);
  CHECK(rep.asymmetric.witness->first.isZero());
  CHECK(rep.transitive.verdict == Verdict::NotRefuted);

  rep = relation_properties({d, true}, box_source(2, 5), 200, rng);
  CHECK(rep.reflexive.verdict == Verdict::False);
  CHECK(rep.asymmetric.verdict == Verdict::NotRefuted);

  const SetExpr shifted = SetExpr::shift(V({1, 1}), nonneg(2));
  rep = relation_properties({shifted, false}, SetSampler(shifted).as_source(), 200, rng);
  CHECK(rep.reflexive.verdict == Verdict::False);
  CHECK(rep.transitive.verdict == Verdict::NotRefuted);
  CHECK(rep.cone_compatible.verdict == Verdict::False);

  const SetExpr half = SetExpr::halfspaces(M({{1, 1}}), V({0}));
  rep = relation_properties({half, false}, SetSampler(half).as_source(), 200, rng);
  CHECK(rep.antisymmetric.verdict == Verdict::False);
}

TEST_CASE("minimal points") {
  const PointCloud f = example_cloud();
  const DominationRelation r{nonneg(2), false};
  CHECK(min_points(r, f) == std::vector<std::size_t>{0, 1, 2});
  CHECK(min_via_eff(nonneg(2), f) == std::vector<std::size_t>{0, 1, 2});
  CHECK(min_points(r, PointCloud({V({4, 4})})) == std::vector<std::size_t>{0});
  CHECK(min_points(r, PointCloud({V({1, 1}), V({1, 1})})) == std::vector<std::size_t>{0, 1});
  // a symmetric D removes nothing
  const SetExpr ball = SetExpr::oracle(make_catalog_oracle("norm-ball", {1.0}, true, {}, 2));
  CHECK(min_via_eff(ball, PointCloud({V({0, 0}), V({0.5, 0}), V({5, 5})})) ==
        std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("Min equals Eff of D minus (-D) on random instances") {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const std::size_t dim = 2 + i % 3;
    const SetExpr d = i % 2 ? random_pointed_cone(dim, rng) : nonneg(dim);
    const PointCloud f = random_cloud(dim, 40, rng);
    const auto m = min_points({d, false}, f);
    CHECK(m == min_via_eff(d, f));
    CHECK(m == eff(f, d).indices);  // antisymmetric D
  }
}

TEST_CASE("adding a constant preserves the relation") {
  Rng rng(43);
  const DominationRelation r{random_pointed_cone(3, rng), false};
  for (int i = 0; i < 500; ++i) {
    const Vector a = box_source(3, 4)(rng), b = box_source(3, 4)(rng), s = box_source(3, 4)(rng);
    CHECK(relation_holds(r, a, b) == relation_holds(r, Vector(a + s), Vector(b + s)));
  }
}
