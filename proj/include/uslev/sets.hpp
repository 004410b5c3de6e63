#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "uslev/errors.hpp"

namespace uslev {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

/// Membership slack, scaled as tol * (1 + |b_i|) per halfspace row.
inline constexpr double kDefaultTol = 1e-9;

/// {y : <a_i, y> <= b_i for all rows i}. Closed by construction.
struct HalfspacePolyhedron {
  Matrix normals;
  Vector offsets;

  /// Validates shape, finiteness and the absence of zero rows.
  static HalfspacePolyhedron make(Matrix normals, Vector offsets);

  std::size_t dim() const { return static_cast<std::size_t>(normals.cols()); }
  std::size_t rows() const { return static_cast<std::size_t>(normals.rows()); }

  bool contains(const Vector& y, double tol = kDefaultTol) const;
  bool contains_core(const Vector& y, double margin = kDefaultTol) const;
};

enum class OrthantSign { NonNeg, NonPos };

/// Three-valued answer for structural questions that are not always
/// decidable from a representation.
enum class Tri { False, True, Unknown };

std::string to_string(Tri t);

/// A nonpolyhedral set given by a membership predicate. Oracles carry their
/// own declarations of closedness and of directions k with k in -0+A; those
/// declarations are what licenses bisection along k.
struct OracleSet {
  std::string name;
  std::vector<double> params;
  std::size_t dim = 0;
  bool declared_closed = false;
  std::vector<Vector> recession_directions;
  std::function<bool(const Vector&, double)> member;
  std::function<bool(const Vector&, double)> core;  // empty: no core predicate
  Tri convex = Tri::Unknown;
  Tri is_cone = Tri::Unknown;
};

/// Builds an oracle from the built-in catalog ("hyperbola", "norm-ball").
/// Throws InputError for unknown names or bad parameters.
OracleSet make_catalog_oracle(const std::string& name, std::vector<double> params,
                              bool declared_closed, std::vector<Vector> recession,
                              std::optional<std::size_t> dim);

struct SetNode;

/// Immutable compositional description of a subset of R^n. Cheap to copy;
/// subtrees are shared.
class SetExpr {
 public:
  static SetExpr halfspaces(Matrix normals, Vector offsets);
  static SetExpr polyhedron(HalfspacePolyhedron poly);
  static SetExpr orthant(std::size_t dim, OrthantSign sign);
  static SetExpr shift(Vector offset, SetExpr base);
  static SetExpr negate(SetExpr base);
  static SetExpr union_of(std::vector<SetExpr> parts);
  static SetExpr oracle(OracleSet set);

  std::size_t dim() const { return dim_; }
  const SetNode& node() const { return *node_; }

 private:
  SetExpr(std::shared_ptr<const SetNode> node, std::size_t dim)
      : node_(std::move(node)), dim_(dim) {}

  std::shared_ptr<const SetNode> node_;
  std::size_t dim_;
};

struct PolyhedronNode {
  HalfspacePolyhedron poly;
};
struct OrthantNode {
  std::size_t dim;
  OrthantSign sign;
};
struct ShiftNode {
  Vector offset;
  SetExpr base;
};
struct NegateNode {
  SetExpr base;
};
struct UnionNode {
  std::vector<SetExpr> parts;
};
struct OracleNode {
  OracleSet set;
};

struct SetNode {
  std::variant<PolyhedronNode, OrthantNode, ShiftNode, NegateNode, UnionNode, OracleNode> v;
};

/// y in S, with membership slack `tol`. Throws InputError on dimension mismatch.
bool contains(const SetExpr& s, const Vector& y, double tol = kDefaultTol);

/// y in core S by `margin`. Union cores are approximated by the union of the
/// parts' cores, which can miss points where pieces touch. Throws Unsupported
/// for oracles without a core predicate.
bool contains_core(const SetExpr& s, const Vector& y, double margin = kDefaultTol);

/// 0+S for Polyhedron/Orthant/Shift/Negate compositions.
/// Throws Unsupported for Union and Oracle.
SetExpr recession_cone(const SetExpr& s);

struct DirectionClass {
  bool in_minus_recession = false;
  bool in_minus_core_recession = false;
};

/// Whether -k lies in 0+S (and in its core by margin). Throws InputError for
/// k = 0 and Unsupported where recession_cone is unsupported.
DirectionClass classify_direction(const SetExpr& s, const Vector& k);

/// True if k in -0+S can be certified from the representation: by
/// recession cones for polyhedral pieces, by declaration for oracles, and
/// part-by-part for unions.
bool certifies_minus_recession(const SetExpr& s, const Vector& k);

/// Closed by construction (polyhedra, orthants) or by declaration (oracles).
bool is_closed(const SetExpr& s);

/// Disjunctive normal form: the set as a finite union of polyhedra.
/// nullopt when an oracle occurs anywhere in the expression.
std::optional<std::vector<HalfspacePolyhedron>> flatten(const SetExpr& s);

/// Intersection of two sets that each flatten to a single polyhedron.
SetExpr intersect(const SetExpr& a, const SetExpr& b);

struct ConeFlags {
  bool contains_zero = false;
  Tri pointed = Tri::Unknown;
  Tri is_cone = Tri::Unknown;
  Tri core_nonempty = Tri::Unknown;
  Tri convex = Tri::Unknown;
};

/// Structural flags computed from the representation; Unknown where the
/// representation does not decide the question.
ConeFlags compute_flags(const SetExpr& s);

/// A domination set together with its cached structural flags.
struct DominationSet {
  explicit DominationSet(SetExpr s) : set(std::move(s)), flags(compute_flags(set)) {}
  SetExpr set;
  ConeFlags flags;
};

/// Produces candidate points; samplers filter them by membership.
using PointSource = std::function<Vector(Rng&)>;

struct FreeDisposalResult {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::optional<Vector> witness_a;
  std::optional<Vector> witness_c;
};

/// Sampled test of A = A - C: draws a from `from_set`, c from `from_cone`,
/// discards draws that are not members, and looks for a - c outside A.
FreeDisposalResult free_disposal_check(const SetExpr& a_set, const SetExpr& cone,
                                       const PointSource& from_set,
                                       const PointSource& from_cone, std::size_t n_samples,
                                       Rng& rng);

/// A point of {y : <a_i,y> <= b_i - slack_i} found by cyclic projections
/// from `start`, with slack_i = slack * (1 + |b_i|); nullopt if none is found.
std::optional<Vector> feasible_point(const HalfspacePolyhedron& p, const Vector& start,
                                     double slack = 0.0, int max_sweeps = 2000);

void require_dim(const SetExpr& s, const Vector& y, const char* what);

}  // namespace uslev
