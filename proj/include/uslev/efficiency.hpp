#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "uslev/ext_scalar.hpp"
#include "uslev/point_cloud.hpp"
#include "uslev/sets.hpp"

namespace uslev {

struct EffResult {
  std::vector<std::size_t> indices;       // sorted
  std::vector<std::string> certificates;  // aligned with indices
  std::vector<std::size_t> indeterminate; // points a tolerance window could not decide

  bool contains(std::size_t i) const;
};

/// diff = y0 - y; returns true when y dominates y0 through diff.
using DominancePredicate = std::function<bool(const Vector&)>;

/// Brute-force O(|F|^2) efficient-point filter: y0 is kept iff no y in F,
/// distinct from y0 as a point, has `dominates(y0 - y)`. Duplicates of y0
/// never disqualify it.
std::vector<std::size_t> eff_by(std::span<const Vector> points, const DominancePredicate& dominates);

/// Eff(F, D): y0 with F ∩ (y0 - D) ⊆ {y0}.
EffResult eff(const PointCloud& f, const SetExpr& d, double tol = kDefaultTol);

/// WEff(F, D) = Eff(F, core D). Throws Unsupported if D has no core predicate.
EffResult weff(const PointCloud& f, const SetExpr& d, double margin = kDefaultTol);

enum class Monotonicity { None, Monotone, Strict };

struct ScalarFilterResult {
  std::vector<std::size_t> argmin;
  EffResult result;
  std::string classification;
  std::vector<std::string> warnings;
};

/// Minimizers of a scalar function over F (nu entries excluded, ties within
/// 1e-9) and what the declared monotonicity lets us conclude about them:
///   strict:                argmin ⊆ Eff(F, D)
///   monotone + singleton:  the minimizer is efficient
///   otherwise:             Eff(argmin, D), which equals Eff(F,D) ∩ argmin
///                          when the function is D-monotone.
ScalarFilterResult scalar_filter(const PointCloud& f, std::span<const ExtScalar> values,
                                 const SetExpr& d, Monotonicity monotonicity);

struct CheckItem {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  std::string witness;
  std::string note;
};

struct AlgebraOptions {
  std::size_t augmentations = 50;
  std::size_t slices = 20;
};

struct AlgebraReport {
  std::vector<CheckItem> items;
  bool all_passed() const;
};

/// Sampled checks of the set algebra of efficient points on a concrete
/// cloud: invariance of Eff under adding/removing 0 from D, invariance
/// under augmenting F by points of F + (D \ {0}), the slice identities for
/// Eff and WEff, and that efficient points avoid core(F + D).
AlgebraReport eff_algebra_check(const PointCloud& f, const SetExpr& d, Rng& rng,
                                const AlgebraOptions& opts = {});

}  // namespace uslev
