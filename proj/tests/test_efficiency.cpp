#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "oracles.hpp"
#include "uslev/checks.hpp"
#include "uslev/efficiency.hpp"
#include "uslev/phi.hpp"

using namespace uslev;

namespace {

PointCloud example_cloud() { return PointCloud({V({0, 3}), V({1, 1}), V({3, 0}), V({2, 2})}); }

using Idx = std::vector<std::size_t>;

// nondominated under the orthant computed without the library
Idx brute_orthant(const PointCloud& f, bool weak) {
  std::vector<oracle::Vec> pts;
  for (const Vector& p : f.points()) pts.push_back(to_std(p));
  return oracle::nondominated(pts, [weak](const oracle::Vec& diff) {
    for (double x : diff)
      if (weak ? x <= 0 : x < 0) return false;
    return true;
  });
}

}  // namespace

TEST_CASE("eff and weff on small clouds") {
  const PointCloud f = example_cloud();
  CHECK(eff(f, nonneg(2)).indices == Idx{0, 1, 2});
  CHECK(weff(f, nonneg(2)).indices == Idx{0, 1, 2});
  const PointCloud g({V({0, 0}), V({0, 1})});
  CHECK(eff(g, nonneg(2)).indices == Idx{0});
  CHECK(weff(g, nonneg(2)).indices == Idx{0, 1});
  CHECK(weff(PointCloud({V({5, 5})}), nonneg(2)).indices == Idx{0});
  const SetExpr empty = SetExpr::halfspaces(M({{1, 0}, {-1, 0}}), V({-1, -1}));
  CHECK(eff(f, empty).indices == Idx{0, 1, 2, 3});
  const auto r = eff(f, nonneg(2));
  CHECK(r.certificates.size() == r.indices.size());
  CHECK(r.contains(1));
  CHECK_FALSE(r.contains(3));
}

TEST_CASE("duplicates do not disqualify each other") {
  const PointCloud f({V({1, 1}), V({1, 1}), V({2, 2})});
  CHECK(eff(f, nonneg(2)).indices == Idx{0, 1});
}

TEST_CASE("agreement with the brute-force filter") {
  Rng rng(51);
  for (int i = 0; i < 60; ++i) {
    const std::size_t dim = 2 + i % 3;
    const PointCloud f = random_cloud(dim, 80, rng);
    CHECK(eff(f, nonneg(dim)).indices == brute_orthant(f, false));
    CHECK(weff(f, nonneg(dim)).indices == brute_orthant(f, true));
  }
}

TEST_CASE("set relations between filters") {
  Rng rng(52);
  for (int i = 0; i < 60; ++i) {
    const std::size_t dim = 2 + i % 3;
    const SetExpr d = random_pointed_cone(dim, rng);
    const PointCloud f = random_cloud(dim, 60, rng);
    const Idx e = eff(f, d).indices, w = weff(f, d).indices;
    CHECK(std::includes(w.begin(), w.end(), e.begin(), e.end()));

    // a smaller D keeps more points
    Matrix extra = Matrix::Zero(1, static_cast<Eigen::Index>(dim));
    extra(0, 0) = -1;
    const SetExpr smaller = intersect(d, SetExpr::halfspaces(extra, V({0})));
    const Idx e1 = eff(f, smaller).indices;
    CHECK(std::includes(e1.begin(), e1.end(), e.begin(), e.end()));

    // permuting F permutes the answer
    std::vector<std::size_t> perm(f.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Idx ep = eff(f.subset(perm), d).indices;
    Idx mapped;
    for (std::size_t j : ep) mapped.push_back(perm[j]);
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == e);
  }
}

TEST_CASE("scalar filter") {
  const PointCloud f = example_cloud();
  const PhiProblem p(SetExpr::shift(V({4, 4}), nonpos(2)), V({1, 1}));
  std::vector<ExtScalar> values;
  for (const Vector& y : f.points()) values.push_back(phi_eval(p, y));
  CHECK(values[0].value() == -1);
  CHECK(values[1].value() == -3);
  CHECK(values[3].value() == -2);
  auto r = scalar_filter(f, values, nonneg(2), Monotonicity::Monotone);
  CHECK(r.argmin == Idx{1});
  CHECK(r.classification == "unique-minimizer-efficient");
  CHECK(r.result.indices == Idx{1});

  const std::vector<ExtScalar> flat(4, ExtScalar::real(0));
  r = scalar_filter(f, flat, nonneg(2), Monotonicity::None);
  CHECK(r.argmin == Idx{0, 1, 2, 3});
  CHECK(r.result.indices == eff(f, nonneg(2)).indices);

  const std::vector<ExtScalar> nus(4, ExtScalar::nu());
  r = scalar_filter(f, nus, nonneg(2), Monotonicity::Strict);
  CHECK(r.argmin.empty());
  CHECK_FALSE(r.warnings.empty());

  Rng rng(53);
  for (int i = 0; i < 50; ++i) {
    const PointCloud g = random_cloud(3, 50, rng);
    std::vector<ExtScalar> s;
    for (const Vector& y : g.points()) s.push_back(ExtScalar::real(y.sum() + 0.1 * y.maxCoeff()));
    r = scalar_filter(g, s, nonneg(3), Monotonicity::Strict);
    const Idx e = eff(g, nonneg(3)).indices;
    CHECK(std::includes(e.begin(), e.end(), r.argmin.begin(), r.argmin.end()));
  }
}

TEST_CASE("efficiency algebra") {
  Rng rng(54);
  const AlgebraReport rep = eff_algebra_check(example_cloud(), nonneg(2), rng);
  CHECK(rep.all_passed());
  CHECK(rep.items.size() >= 5);
  for (int i = 0; i < 30; ++i) {
    const std::size_t dim = 2 + i % 3;
    const SetExpr d = random_pointed_cone(dim, rng);
    const AlgebraReport r = eff_algebra_check(random_cloud(dim, 40, rng), d, rng);
    for (const CheckItem& item : r.items) CHECK_MESSAGE(item.passed, item.name << ": " << item.witness);
  }
}
