#pragma once

#include <span>
#include <string>
#include <vector>

#include "uslev/ext_scalar.hpp"
#include "uslev/phi.hpp"
#include "uslev/sets.hpp"

namespace uslev {

/// Minkowski functional p_S(y) = inf{lambda > 0 : y in lambda S}, by
/// bracketing and bisection on lambda. Requires 0 in S (else InputError
/// "gauge undefined here") and S star-shaped about 0 along the ray of y.
/// Returns nu if no lambda up to the bracket cap works; Real(0) when every
/// small lambda works.
ExtScalar minkowski_eval(const SetExpr& s, const Vector& y, double tol = kDefaultTol,
                         int max_doublings = kDefaultMaxDoublings);

/// A closed convex pointed cone C with an order unit k in core C.
class OrderUnitSpec {
 public:
  /// Validates k in core C by margin and that C is a convex cone. A cone
  /// whose pointedness cannot be decided is accepted with a warning; a cone
  /// with a nontrivial lineality space is rejected.
  static OrderUnitSpec make(SetExpr cone, Vector k);

  const SetExpr& cone() const { return cone_; }
  const Vector& unit() const { return k_; }
  const ConeFlags& flags() const { return flags_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  /// phi_{-C,k}
  const PhiProblem& negative_cone_phi() const { return neg_phi_; }

 private:
  OrderUnitSpec(SetExpr cone, Vector k, ConeFlags flags, std::vector<std::string> warnings);

  SetExpr cone_;
  Vector k_;
  ConeFlags flags_;
  std::vector<std::string> warnings_;
  PhiProblem neg_phi_;
};

/// The order interval [-k, k]_C = (C - k) ∩ (k - C) as a polyhedron.
SetExpr order_interval(const SetExpr& cone, const Vector& k);

/// ||y||_{C,k}, the gauge of [-k,k]_C, computed as
/// max(phi_{-C,k}(y), phi_{-C,k}(-y)).
double order_unit_norm(const OrderUnitSpec& spec, const Vector& y);

struct CoincidenceReport {
  std::size_t samples = 0;
  double max_diff = 0.0;
  bool passed = true;
  Vector worst_point;
};

/// Compares ||y - a||_{C,k} with phi_{a-C,k}(y) on the given points, which
/// should lie in a + C (the identity fails off that set).
CoincidenceReport norm_phi_coincidence_check(const OrderUnitSpec& spec, const Vector& a,
                                             std::span<const Vector> samples,
                                             double threshold = kDefaultTol);

}  // namespace uslev
