#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uslev/efficiency.hpp"
#include "uslev/ext_scalar.hpp"
#include "uslev/point_cloud.hpp"
#include "uslev/sets.hpp"

namespace uslev {

/// One hypothesis check. status is one of "verified" (decided from the
/// representation), "verified on samples", "failed", "unsupported".
struct AuditEntry {
  std::string hypothesis;
  std::string status;
  std::string witness;

  bool ok() const { return status == "verified" || status == "verified on samples"; }
};

struct PointVerdict {
  std::size_t index = 0;
  std::string verdict;  // efficient | weakly-efficient | not-weakly-efficient | not-efficient |
                        // indeterminate | uncertified
  std::string theorem;  // tag of the result that justifies the verdict
  std::optional<double> anchor;     // phi or norm value at the point itself
  std::optional<double> min_value;  // minimum over F of the same functional
};

struct ScalarReport {
  std::string method;
  std::vector<ExtScalar> values;
  std::vector<std::size_t> argmin;
  std::vector<PointVerdict> verdicts;
  std::vector<std::size_t> efficient;
  std::vector<std::size_t> weakly_efficient;
  std::vector<std::size_t> indeterminate;
  std::vector<AuditEntry> audit;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
};

struct AuditOptions {
  std::uint64_t seed = 42;
  std::size_t probes = 256;
};

/// Minimizes phi_{a-H,k} over F ∩ dom and certifies the minimizers from
/// sampled inclusions between H and D:
///   H + D ⊆ H and a unique minimizer     -> efficient
///   H + (D \ {0}) ⊆ core H               -> every minimizer efficient
///   H + D ⊆ H, or H + core D ⊆ core H    -> every minimizer weakly efficient
ScalarReport reference_scalarize(const PointCloud& f, const SetExpr& h, const Vector& a,
                                 const Vector& k, const SetExpr& d, const AuditOptions& opts = {});

/// Eff(F,D) as the points y0 for which phi_{y0-D,k} is > 0 on every other
/// point of F ∩ dom. Requires k in 0+D and D closed (else Refusal). Values
/// in (0, 1e-9] are reported as indeterminate; -inf counts as failing.
ScalarReport characterize_eff_report(const PointCloud& f, const SetExpr& d, const Vector& k,
                                     const AuditOptions& opts = {});
EffResult characterize_eff(const PointCloud& f, const SetExpr& d, const Vector& k);

/// WEff(F,D) as the points y0 for which phi_{y0-D,k} is >= 0 on every other
/// point of F ∩ dom. Requires D + R_> k ⊆ core D (sampled; else Refusal).
ScalarReport characterize_weff_report(const PointCloud& f, const SetExpr& d, const Vector& k,
                                      const AuditOptions& opts = {});
EffResult characterize_weff(const PointCloud& f, const SetExpr& d, const Vector& k);

enum class Orientation { Below, Above };

/// Scalarization anchored at a bound a of F. For each y0 the direction is
/// k = a - y0 (below) or y0 - a (above); y0 is weakly efficient iff it
/// minimizes phi_{a-D,k} over F, efficient iff it is the strict minimizer,
/// and the value at y0 is -1 (below) or +1 (above).
/// Requires a closed convex cone D with nonempty core and F ⊆ a ∓ core D.
ScalarReport bound_scalarize(const PointCloud& f, const SetExpr& d, const Vector& a,
                             Orientation orientation, const AuditOptions& opts = {});

/// Same characterization through the order-unit norm: with k = y0 - a,
/// y0 is weakly efficient iff it minimizes ||y - a||_{D,k} over F, and
/// ||y0 - a||_{D,k} = 1. Requires D a closed convex pointed cone and
/// F ⊆ a + core D.
ScalarReport norm_characterize(const PointCloud& f, const SetExpr& d, const Vector& a,
                               const AuditOptions& opts = {});

struct SeparationResult {
  std::string verdict;       // intersecting | disjoint
  std::string core_verdict;  // disjoint_core | core_intersecting | not_assessed
  std::vector<ExtScalar> values;
  std::optional<std::size_t> witness;       // a point with phi <= 0
  std::optional<std::size_t> core_witness;  // a point with phi < 0
  std::vector<AuditEntry> audit;
  std::uint64_t seed = 0;
};

/// Decides A ∩ D = ∅ for a finite D through phi_{A,k}: some d has
/// phi(d) <= 0 iff d in A. Requires A closed and k in -0+A (else Refusal).
/// The core verdict is only given when A - R_> k ⊆ core A passes a sampled
/// audit.
SeparationResult separate(const SetExpr& a, const Vector& k, const PointCloud& d_points,
                          const AuditOptions& opts = {});

}  // namespace uslev
