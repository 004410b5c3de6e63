#pragma once

#include <optional>
#include <vector>

#include "uslev/ext_scalar.hpp"
#include "uslev/sets.hpp"

namespace uslev {

inline constexpr double kDefaultBracketInit = 1.0;
inline constexpr int kDefaultMaxDoublings = 60;

/// The functional phi_{A,k}(y) = inf{t in R : y in A + t k}, whose sublevel
/// sets {phi <= t} are the translates A + t k of a single set.
///
/// Construction validates k != 0 and matching dimensions, and flattens A
/// into polyhedral pieces once when the expression contains no oracle.
class PhiProblem {
 public:
  PhiProblem(SetExpr set, Vector k, double tol = kDefaultTol);

  const SetExpr& set() const { return set_; }
  const Vector& direction() const { return k_; }
  double tol() const { return tol_; }

  bool closed_form_supported() const { return pieces_.has_value(); }
  /// Throws Unsupported when the set contains an oracle.
  const std::vector<HalfspacePolyhedron>& pieces() const;

 private:
  SetExpr set_;
  Vector k_;
  double tol_;
  std::optional<std::vector<HalfspacePolyhedron>> pieces_;
};

/// Closed form on polyhedral compositions. Each row restricts t to
/// {t : t <a_i,k> >= <a_i,y> - b_i}; the infimum of the resulting interval
/// is returned, -inf if it is unbounded below, nu if it is empty. Unions
/// take the minimum over their pieces, ignoring nu pieces.
///
/// Throws Unsupported ("use phi_oracle") for expressions with oracles.
ExtScalar phi_eval(const PhiProblem& p, const Vector& y);

/// Independent evaluation by bracketing and bisection on the membership
/// predicate t -> [y - t k in A]. Valid only when that predicate is
/// monotone in t, i.e. A is closed and k in -0+A is certified; otherwise
/// throws Refusal.
ExtScalar phi_oracle(const PhiProblem& p, const Vector& y,
                     double bracket_init = kDefaultBracketInit,
                     int max_doublings = kDefaultMaxDoublings);

/// phi_eval where supported, phi_oracle otherwise.
ExtScalar phi_value(const PhiProblem& p, const Vector& y);

/// y in A + t k, by membership only.
bool sublevel_contains(const PhiProblem& p, const Vector& y, double t);

/// y in dom phi_{A,k} = A + R k.
bool dom_contains(const PhiProblem& p, const Vector& y);

}  // namespace uslev
