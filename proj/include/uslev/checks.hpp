#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "uslev/phi.hpp"
#include "uslev/point_cloud.hpp"
#include "uslev/sets.hpp"

namespace uslev {

// ---- random instances -----------------------------------------------------

/// A polyhedron A together with a direction k certified to lie in -0+A.
/// Rows have <a_i,k> in [0.2, 1], except at most one row orthogonal to k.
struct DirectedPolyhedron {
  SetExpr set;
  Vector k;
};
DirectedPolyhedron random_directed_polyhedron(std::size_t dim, Rng& rng);

/// {u : G u >= 0} with G strictly positive (rows >= dim), so the cone
/// contains the nonnegative orthant, is pointed for generic G, and has the
/// all-ones vector in its core.
SetExpr random_pointed_cone(std::size_t dim, Rng& rng);

/// A cloud of up to max_points points: either integer coordinates in
/// [0, 5] (ties and duplicates likely) or a noisy front around the unit
/// sphere in the positive orthant, shifted by `base`.
PointCloud random_cloud(std::size_t dim, std::size_t max_points, Rng& rng);

// ---- property suites ------------------------------------------------------

/// The phi evaluator under test. Swappable so that the suites can be run
/// against a deliberately broken implementation.
using PhiEvaluator = std::function<ExtScalar(const PhiProblem&, const Vector&)>;

struct CheckOptions {
  std::uint64_t seed = 42;
  std::size_t size = 200;  // samples per property
  PhiEvaluator phi = phi_eval;
};

struct PropertyResult {
  std::string suite;
  std::string property;
  std::size_t trials = 0;
  bool passed = true;
  std::string witness;
};

struct CheckSummary {
  std::vector<PropertyResult> results;
  std::vector<std::string> warnings;
  bool all_passed() const;
};

/// extvalues, sets, phi, norms, order, efficiency, scalarize.
const std::vector<std::string>& suite_names();

/// Runs one suite by name, or every suite for "all". Throws InputError for
/// unknown names. With size 0 every property passes vacuously and a
/// warning is recorded.
CheckSummary run_checks(const std::string& suite, const CheckOptions& opts);

}  // namespace uslev
