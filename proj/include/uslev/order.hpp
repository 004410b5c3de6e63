#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uslev/point_cloud.hpp"
#include "uslev/sets.hpp"

namespace uslev {

/// y1 ≻ y2 iff y2 in y1 + D. With `strict`, membership is taken in core D.
struct DominationRelation {
  SetExpr d;
  bool strict = false;
};

bool relation_holds(const DominationRelation& r, const Vector& y1, const Vector& y2);

/// Decided properties are True/False; sampled universal claims that found no
/// counterexample are NotRefuted, never True.
enum class Verdict { True, False, NotRefuted };

std::string to_string(Verdict v);

struct PropertyVerdict {
  Verdict verdict = Verdict::NotRefuted;
  std::optional<std::pair<Vector, Vector>> witness;  // (y1, y2) or (d1, d2)
  std::string note;
};

struct RelationReport {
  PropertyVerdict reflexive;
  PropertyVerdict asymmetric;
  PropertyVerdict antisymmetric;
  PropertyVerdict transitive;
  PropertyVerdict cone_compatible;
  std::size_t samples = 0;  // members of D actually drawn
};

/// Reflexivity is decided exactly (0 in D). The others are searched for
/// counterexamples among up to n members of D, drawn from `candidates`.
RelationReport relation_properties(const DominationRelation& r, const PointSource& candidates,
                                   std::size_t n, Rng& rng);

/// Min(F, ≻) = {y0 : for all y in F, y ≻ y0 implies y0 ≻ y}. O(|F|^2).
std::vector<std::size_t> min_points(const DominationRelation& r, const PointCloud& f);

/// Min through efficiency: Eff(F, D \ (-D)).
std::vector<std::size_t> min_via_eff(const SetExpr& d, const PointCloud& f);

}  // namespace uslev
