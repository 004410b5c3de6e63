#include "uslev/phi.hpp"

#include <cmath>
#include <limits>

namespace uslev {

namespace {

// Membership slack used inside bisection. Much tighter than the default so
// that the bracketing error stays far below the bisection tolerance.
constexpr double kProbeTol = 1e-12;
constexpr int kMaxBisections = 200;
// Beyond |t| * |k| ~ 1e10 * (1 + |y|) the point y - t k no longer resolves y
// to about 1e-6, and membership answers reflect rounding rather than the set.
constexpr double kResolution = 1e10;

ExtScalar phi_piece(const HalfspacePolyhedron& poly, const Vector& k, const Vector& y,
                    double tol) {
  const double knorm = k.norm();
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < poly.normals.rows(); ++i) {
    const auto row = poly.normals.row(i);
    const double d = row.dot(k);
    const double c = row.dot(y) - poly.offsets[i];
    if (std::abs(d) <= 1e-12 * (1.0 + row.norm() * knorm)) {
      if (c > tol * (1.0 + std::abs(poly.offsets[i]))) return ExtScalar::nu();
    } else if (d > 0.0) {
      lower = std::max(lower, c / d);
    } else {
      upper = std::min(upper, c / d);
    }
  }
  if (std::isfinite(lower) && std::isfinite(upper) &&
      lower > upper + tol * (1.0 + std::abs(upper)))
    return ExtScalar::nu();
  if (!std::isfinite(lower)) return ExtScalar::neg_inf();
  return ExtScalar::real(lower);
}

}  // namespace

PhiProblem::PhiProblem(SetExpr set, Vector k, double tol)
    : set_(std::move(set)), k_(std::move(k)), tol_(tol) {
  require_dim(set_, k_, "PhiProblem");
  if (!k_.allFinite() || k_.lpNorm<Eigen::Infinity>() == 0.0)
    throw InputError("PhiProblem: k must be finite and nonzero");
  if (!(tol_ > 0.0)) throw InputError("PhiProblem: tol must be positive");
  pieces_ = flatten(set_);
}

const std::vector<HalfspacePolyhedron>& PhiProblem::pieces() const {
  if (!pieces_) throw Unsupported("closed form unavailable for oracle sets: use phi_oracle");
  return *pieces_;
}

ExtScalar phi_eval(const PhiProblem& p, const Vector& y) {
  require_dim(p.set(), y, "phi_eval");
  bool any = false;
  double best = 0.0;
  for (const HalfspacePolyhedron& piece : p.pieces()) {
    const ExtScalar v = phi_piece(piece, p.direction(), y, p.tol());
    if (v.is_neg_inf()) return v;
    if (v.is_real() && (!any || v.value() < best)) {
      best = v.value();
      any = true;
    }
  }
  return any ? ExtScalar::real(best) : ExtScalar::nu();
}

ExtScalar phi_oracle(const PhiProblem& p, const Vector& y, double bracket_init,
                     int max_doublings) {
  require_dim(p.set(), y, "phi_oracle");
  if (!is_closed(p.set()))
    throw Refusal("oracle invalid: A not declared closed");
  if (!certifies_minus_recession(p.set(), p.direction()))
    throw Refusal("oracle invalid: sublevel sets not monotone along k (k in -0+A not certified)");
  if (!(bracket_init > 0.0)) throw InputError("phi_oracle: bracket_init must be positive");

  const Vector& k = p.direction();
  auto member = [&](double t) { return contains(p.set(), Vector(y - t * k), kProbeTol); };
  const double reach =
      kResolution * (1.0 + y.lpNorm<Eigen::Infinity>()) / k.lpNorm<Eigen::Infinity>();

  double hi = bracket_init;
  int doublings = 0;
  while (!member(hi)) {
    if (doublings++ >= max_doublings || 2.0 * hi > reach) return ExtScalar::nu();
    hi *= 2.0;
  }
  double lo = -bracket_init;
  doublings = 0;
  while (member(lo)) {
    if (doublings++ >= max_doublings || -2.0 * lo > reach) return ExtScalar::neg_inf();
    lo *= 2.0;
  }
  for (int i = 0; i < kMaxBisections; ++i) {
    if (hi - lo <= p.tol() * (1.0 + std::abs(hi)) * 0.5) break;
    const double mid = 0.5 * (lo + hi);
    if (member(mid))
      hi = mid;
    else
      lo = mid;
  }
  return ExtScalar::real(0.5 * (lo + hi));
}

ExtScalar phi_value(const PhiProblem& p, const Vector& y) {
  return p.closed_form_supported() ? phi_eval(p, y) : phi_oracle(p, y);
}

bool sublevel_contains(const PhiProblem& p, const Vector& y, double t) {
  require_dim(p.set(), y, "sublevel_contains");
  return contains(p.set(), Vector(y - t * p.direction()), p.tol());
}

bool dom_contains(const PhiProblem& p, const Vector& y) { return !phi_value(p, y).is_nu(); }

}  // namespace uslev
