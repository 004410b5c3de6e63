#include "uslev/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace uslev {

namespace {
constexpr double kProbeTol = 1e-12;
constexpr int kMaxBisections = 200;
}  // namespace

ExtScalar minkowski_eval(const SetExpr& s, const Vector& y, double tol, int max_doublings) {
  require_dim(s, y, "minkowski_eval");
  if (!contains(s, Vector::Zero(y.size()))) throw InputError("gauge undefined here: 0 not in S");
  if (y.lpNorm<Eigen::Infinity>() == 0.0) return ExtScalar::real(0.0);

  auto member = [&](double lambda) { return contains(s, Vector(y / lambda), kProbeTol); };

  double hi = 1.0;
  int steps = 0;
  while (!member(hi)) {
    if (steps++ >= max_doublings) return ExtScalar::nu();
    hi *= 2.0;
  }
  double lo = hi * 0.5;
  steps = 0;
  while (member(lo)) {
    if (steps++ >= max_doublings) return ExtScalar::real(0.0);
    hi = lo;
    lo *= 0.5;
  }
  for (int i = 0; i < kMaxBisections && hi - lo > tol * 0.5; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (member(mid))
      hi = mid;
    else
      lo = mid;
  }
  return ExtScalar::real(0.5 * (lo + hi));
}

OrderUnitSpec::OrderUnitSpec(SetExpr cone, Vector k, ConeFlags flags,
                             std::vector<std::string> warnings)
    : cone_(std::move(cone)),
      k_(std::move(k)),
      flags_(flags),
      warnings_(std::move(warnings)),
      neg_phi_(SetExpr::negate(cone_), k_) {}

OrderUnitSpec OrderUnitSpec::make(SetExpr cone, Vector k) {
  require_dim(cone, k, "OrderUnitSpec");
  const ConeFlags flags = compute_flags(cone);
  if (flags.is_cone != Tri::True) throw Refusal("order unit norm: C is not certified to be a cone");
  if (flags.convex != Tri::True) throw Refusal("order unit norm: C is not certified to be convex");
  if (flags.pointed == Tri::False) throw Refusal("order unit norm: C is not pointed");
  if (!contains_core(cone, k)) throw Refusal("order unit norm: k in core C not certified");
  std::vector<std::string> warnings;
  if (flags.pointed == Tri::Unknown)
    warnings.push_back("pointedness of C could not be decided; norm axioms may fail");
  return OrderUnitSpec(std::move(cone), std::move(k), flags, std::move(warnings));
}

SetExpr order_interval(const SetExpr& cone, const Vector& k) {
  return intersect(SetExpr::shift(-k, cone), SetExpr::shift(k, SetExpr::negate(cone)));
}

double order_unit_norm(const OrderUnitSpec& spec, const Vector& y) {
  require_dim(spec.cone(), y, "order_unit_norm");
  const ExtScalar up = phi_value(spec.negative_cone_phi(), y);
  const ExtScalar down = phi_value(spec.negative_cone_phi(), Vector(-y));
  if (!up.is_real() || !down.is_real())
    throw std::logic_error("order_unit_norm: phi not finite although k in core C");
  return std::max({up.value(), down.value(), 0.0});
}

CoincidenceReport norm_phi_coincidence_check(const OrderUnitSpec& spec, const Vector& a,
                                             std::span<const Vector> samples, double threshold) {
  CoincidenceReport r;
  const PhiProblem shifted(SetExpr::shift(a, SetExpr::negate(spec.cone())), spec.unit());
  for (const Vector& y : samples) {
    const double norm = order_unit_norm(spec, Vector(y - a));
    const ExtScalar phi = phi_value(shifted, y);
    const double diff = phi.is_real() ? std::abs(norm - phi.value())
                                      : std::numeric_limits<double>::infinity();
    ++r.samples;
    if (r.samples == 1 || diff > r.max_diff) {
      r.max_diff = diff;
      r.worst_point = y;
    }
  }
  r.passed = r.max_diff <= threshold;
  return r;
}

}  // namespace uslev
