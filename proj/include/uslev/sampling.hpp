#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "uslev/sets.hpp"

namespace uslev {

/// Uniform candidates in the box [-radius, radius]^dim.
PointSource box_source(std::size_t dim, double radius);

/// Nonnegative multiples of a fixed direction, t uniform in [0, scale].
PointSource ray_source(Vector direction, double scale);

/// Draws members of a set. Polyhedral pieces are sampled by rejection in a
/// box around the origin, falling back to a box around a feasible point
/// found by cyclic projections; oracles are sampled by rejection only.
class SetSampler {
 public:
  explicit SetSampler(SetExpr set, double radius = 10.0);

  const SetExpr& set() const { return set_; }

  /// One member, or nullopt if none was found within the try budget.
  std::optional<Vector> draw(Rng& rng) const;

  /// Up to n members (fewer if the set is hard to hit).
  std::vector<Vector> draw_n(Rng& rng, std::size_t n) const;

  /// Members biased toward the boundary: interior draws mixed with their
  /// projections onto facets and onto pairs of facets, and the origin when
  /// it is a member. Used for sampled audits of set inclusions, which are
  /// usually violated on the boundary first.
  std::vector<Vector> probes(Rng& rng, std::size_t n) const;

  /// PointSource view, for the sampled checks in sets/order.
  PointSource as_source() const;

 private:
  std::optional<Vector> draw_piece(const HalfspacePolyhedron& p, Rng& rng) const;

  SetExpr set_;
  double radius_;
  std::optional<std::vector<HalfspacePolyhedron>> pieces_;
};

}  // namespace uslev
