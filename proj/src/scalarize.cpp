#include "uslev/scalarize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "uslev/norms.hpp"
#include "uslev/phi.hpp"
#include "uslev/sampling.hpp"

namespace uslev {

namespace {

constexpr double kStrict = 1e-9;  // strict-inequality threshold and tie width
constexpr double kAnchorTol = 1e-9;

using Pred = std::function<bool(const Vector&)>;

std::vector<Vector> filtered(std::vector<Vector> v, const Pred& keep) {
  v.erase(std::remove_if(v.begin(), v.end(), [&](const Vector& x) { return !keep(x); }), v.end());
  return v;
}

/// Sampled check of X + Y ⊆ Z over all pairs within the probe budget.
AuditEntry audit_sum_inclusion(std::string hypothesis, const std::vector<Vector>& xs,
                               const std::vector<Vector>& ys, const Pred& in_target,
                               std::size_t budget) {
  AuditEntry e{std::move(hypothesis), "verified on samples", ""};
  if (xs.empty() || ys.empty()) {
    e.status = "unsupported";
    e.witness = "no probe points could be drawn";
    return e;
  }
  const std::size_t side = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(budget)));
  for (std::size_t i = 0; i < std::min(side, xs.size()); ++i)
    for (std::size_t j = 0; j < std::min(side, ys.size()); ++j) {
      const Vector s = xs[i] + ys[j];
      if (!in_target(s)) {
        e.status = "failed";
        e.witness = format_point(xs[i]) + " + " + format_point(ys[j]) + " = " + format_point(s);
        return e;
      }
    }
  return e;
}

/// Sampled check of X + R_> k ⊆ core X (or X - R_> k with sign = -1).
AuditEntry audit_ray_into_core(std::string hypothesis, const SetExpr& x, const Vector& k,
                               double sign, Rng& rng, std::size_t probes) {
  AuditEntry e{std::move(hypothesis), "verified on samples", ""};
  const auto pts = SetSampler(x).probes(rng, std::max<std::size_t>(1, probes / 3));
  if (pts.empty()) return {e.hypothesis, "unsupported", "no probe points could be drawn"};
  for (const Vector& p : pts)
    for (double t : {1e-3, 1.0, 1e3}) {
      const Vector q = p + sign * t * k;
      bool inside = false;
      try {
        inside = contains_core(x, q);
      } catch (const Unsupported& ex) {
        return {e.hypothesis, "unsupported", ex.what()};
      }
      if (!inside) {
        e.status = "failed";
        e.witness = format_point(q);
        return e;
      }
    }
  return e;
}

bool safe_core(const SetExpr& s, const Vector& y) {
  try {
    return contains_core(s, y);
  } catch (const Unsupported&) {
    return false;
  }
}

void require_cloud_dim(const PointCloud& f, const SetExpr& s, const char* what) {
  if (f.dim() != s.dim())
    throw InputError(std::string(what) + ": cloud and set dimensions differ");
}

std::vector<std::size_t> argmin_of(const std::vector<ExtScalar>& values) {
  std::vector<std::size_t> out;
  const bool any_neg_inf =
      std::any_of(values.begin(), values.end(), [](const ExtScalar& v) { return v.is_neg_inf(); });
  std::optional<double> best;
  for (const ExtScalar& v : values)
    if (v.is_real() && (!best || v.value() < *best)) best = v.value();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const ExtScalar& v = values[i];
    if (any_neg_inf ? v.is_neg_inf() : (v.is_real() && v.value() <= *best + kStrict))
      out.push_back(i);
  }
  return out;
}

/// Shared structural preconditions of the bound- and norm-anchored drivers.
void require_closed_convex_cone(const SetExpr& d, const ConeFlags& flags, ScalarReport& rep) {
  if (!is_closed(d)) throw Refusal("D is not certified to be algebraically closed");
  if (flags.is_cone != Tri::True) throw Refusal("D is not certified to be a cone");
  if (flags.convex != Tri::True) throw Refusal("D is not certified to be convex");
  if (flags.core_nonempty != Tri::True) throw Refusal("core D ≠ ∅ not certified");
  if (safe_core(d, Vector::Zero(static_cast<Eigen::Index>(d.dim()))))
    throw Refusal("D is trivial: 0 in core D, so D = Y");
  rep.audit.push_back({"D non-trivial closed convex cone with core D ≠ ∅", "verified", ""});
}

void fill_sets_from_verdicts(ScalarReport& rep) {
  for (const PointVerdict& v : rep.verdicts) {
    if (v.verdict == "efficient") {
      rep.efficient.push_back(v.index);
      rep.weakly_efficient.push_back(v.index);
    } else if (v.verdict == "weakly-efficient") {
      rep.weakly_efficient.push_back(v.index);
    } else if (v.verdict == "indeterminate") {
      rep.indeterminate.push_back(v.index);
    }
  }
}

}  // namespace

ScalarReport reference_scalarize(const PointCloud& f, const SetExpr& h, const Vector& a,
                                 const Vector& k, const SetExpr& d, const AuditOptions& opts) {
  require_cloud_dim(f, h, "reference_scalarize");
  require_cloud_dim(f, d, "reference_scalarize");
  require_dim(h, a, "reference_scalarize");
  ScalarReport rep;
  rep.method = "reference";
  rep.seed = opts.seed;
  Rng rng(opts.seed);

  const PhiProblem phi(SetExpr::shift(a, SetExpr::negate(h)), k);
  for (const Vector& y : f.points()) rep.values.push_back(phi_value(phi, y));
  rep.argmin = argmin_of(rep.values);
  const auto in_dom = static_cast<std::size_t>(
      std::count_if(rep.values.begin(), rep.values.end(), [](const ExtScalar& v) { return !v.is_nu(); }));
  if (rep.argmin.empty()) {
    rep.notes.push_back(
        "no point of F lies in dom phi_{a-H,k}: the feasible range F ∩ dom is empty, Ψ = ∅");
    return rep;
  }
  if (in_dom < f.size())
    rep.notes.push_back("minimized over F ∩ dom (" + std::to_string(in_dom) + " of " +
                        std::to_string(f.size()) + " points)");

  const std::size_t side = std::max<std::size_t>(4, static_cast<std::size_t>(std::sqrt(opts.probes)));
  const auto h_probes = SetSampler(h).probes(rng, side);
  const auto d_probes = SetSampler(d).probes(rng, side * 2);
  const auto is_nonzero = [](const Vector& v) { return v.lpNorm<Eigen::Infinity>() > 1e-12; };
  const auto d_nonzero = filtered(d_probes, is_nonzero);
  const auto d_core = filtered(d_probes, [&](const Vector& v) { return safe_core(d, v); });

  const AuditEntry h_plus_d = audit_sum_inclusion(
      "H + D ⊆ H", h_probes, d_probes, [&](const Vector& v) { return contains(h, v); }, opts.probes);
  const AuditEntry h_plus_d_core = audit_sum_inclusion(
      "H + (D \\ {0}) ⊆ core H", h_probes, d_nonzero,
      [&](const Vector& v) { return safe_core(h, v); }, opts.probes);
  const AuditEntry h_plus_core = audit_sum_inclusion(
      "H + core D ⊆ core H", h_probes, d_core, [&](const Vector& v) { return safe_core(h, v); },
      opts.probes);
  const AuditEntry closed{"H (-k)-directionally closed", is_closed(h) ? "verified" : "failed",
                          is_closed(h) ? "" : "H not certified closed"};
  rep.audit = {h_plus_d, h_plus_d_core, h_plus_core, closed};
  if (h_plus_d.ok())
    rep.notes.push_back("H + D ⊆ H: Eff(F,D) ∩ dom = Eff(F ∩ dom, D) and Eff(F,D) ∩ Ψ = Eff(Ψ,D)");

  std::string verdict = "uncertified", tag = "none";
  if (rep.argmin.size() == 1 && h_plus_d.ok()) {
    verdict = "efficient";
    tag = "ref-unique-minimizer";
  } else if (closed.ok() && h_plus_d_core.ok()) {
    verdict = "efficient";
    tag = "ref-strict-core-inclusion";
  } else if (h_plus_d.ok() || (closed.ok() && h_plus_core.ok())) {
    verdict = "weakly-efficient";
    tag = "ref-weak-inclusion";
  }
  for (std::size_t i : rep.argmin) {
    PointVerdict pv{i, verdict, tag, rep.values[i].as_real(), std::nullopt};
    rep.verdicts.push_back(pv);
  }
  fill_sets_from_verdicts(rep);
  return rep;
}

namespace {

ScalarReport characterize_common(const PointCloud& f, const SetExpr& d, const Vector& k,
                                 bool weak, const AuditOptions& opts) {
  require_cloud_dim(f, d, weak ? "characterize_weff" : "characterize_eff");
  require_dim(d, k, "characterize");
  ScalarReport rep;
  rep.method = weak ? "characterize-weak" : "characterize";
  rep.seed = opts.seed;
  Rng rng(opts.seed);

  if (!is_closed(d)) throw Refusal("D (-k)-directionally closed not certified (D not closed)");
  rep.audit.push_back({"D (-k)-directionally closed", "verified", ""});
  if (weak) {
    AuditEntry e = audit_ray_into_core("D + R_> k ⊆ core D", d, k, 1.0, rng, opts.probes);
    rep.audit.push_back(e);
    if (!e.ok()) throw Refusal("D + R_> k ⊆ core D not verified: " + e.witness);
  } else {
    if (!certifies_minus_recession(SetExpr::negate(d), k)) throw Refusal("k ∈ 0⁺D not certified");
    rep.audit.push_back({"k ∈ 0⁺D", "verified", ""});
  }

  const Vector zero = Vector::Zero(static_cast<Eigen::Index>(d.dim()));
  const bool zero_on_boundary = contains(d, zero) && !safe_core(d, zero);
  bool anchor_ok = true;
  std::string anchor_witness;

  const std::string tag = weak ? "local-phi-nonnegative" : "local-phi-positive";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const PhiProblem phi(SetExpr::shift(f[i], SetExpr::negate(d)), k);
    const ExtScalar self = phi_value(phi, f[i]);
    rep.values.push_back(self);
    if (weak && zero_on_boundary &&
        !(self.is_real() && std::abs(self.value()) <= kAnchorTol) && anchor_ok) {
      anchor_ok = false;
      anchor_witness = "phi_{y0-D,k}(y0) = " + self.to_string() + " at index " + std::to_string(i);
    }
    std::string verdict = weak ? "weakly-efficient" : "efficient";
    std::optional<double> worst;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j == i || same_point(f[i], f[j])) continue;
      const ExtScalar v = phi_value(phi, f[j]);
      if (v.is_nu()) continue;
      if (v.is_neg_inf()) {
        verdict = weak ? "not-weakly-efficient" : "not-efficient";
        break;
      }
      const double x = v.value();
      if (!worst || x < *worst) worst = x;
      if (weak ? x < -kStrict : x <= 0.0) {
        verdict = weak ? "not-weakly-efficient" : "not-efficient";
        break;
      }
      if (!weak && x <= kStrict) verdict = "indeterminate";
    }
    rep.verdicts.push_back({i, verdict, tag, self.as_real(), worst});
  }
  if (weak && zero_on_boundary)
    rep.audit.push_back({"phi_{y0-D,k}(y0) = 0 for 0 ∈ D \\ core D",
                         anchor_ok ? "verified" : "failed", anchor_witness});
  fill_sets_from_verdicts(rep);
  return rep;
}

EffResult to_eff_result(const ScalarReport& rep, bool weak) {
  EffResult r;
  r.indices = weak ? rep.weakly_efficient : rep.efficient;
  r.certificates.assign(r.indices.size(), weak ? "local-phi-nonnegative" : "local-phi-positive");
  r.indeterminate = rep.indeterminate;
  return r;
}

}  // namespace

ScalarReport characterize_eff_report(const PointCloud& f, const SetExpr& d, const Vector& k,
                                     const AuditOptions& opts) {
  return characterize_common(f, d, k, false, opts);
}

EffResult characterize_eff(const PointCloud& f, const SetExpr& d, const Vector& k) {
  return to_eff_result(characterize_eff_report(f, d, k), false);
}

ScalarReport characterize_weff_report(const PointCloud& f, const SetExpr& d, const Vector& k,
                                      const AuditOptions& opts) {
  return characterize_common(f, d, k, true, opts);
}

EffResult characterize_weff(const PointCloud& f, const SetExpr& d, const Vector& k) {
  return to_eff_result(characterize_weff_report(f, d, k), true);
}

ScalarReport bound_scalarize(const PointCloud& f, const SetExpr& d, const Vector& a,
                             Orientation orientation, const AuditOptions& opts) {
  require_cloud_dim(f, d, "bound_scalarize");
  require_dim(d, a, "bound_scalarize");
  ScalarReport rep;
  const bool below = orientation == Orientation::Below;
  rep.method = below ? "bound-below" : "bound-above";
  rep.seed = opts.seed;
  require_closed_convex_cone(d, compute_flags(d), rep);

  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vector gap = below ? Vector(a - f[i]) : Vector(f[i] - a);
    if (!safe_core(d, gap))
      throw Refusal(std::string(below ? "F ⊆ a - core D" : "F ⊆ a + core D") +
                    " violated at index " + std::to_string(i));
  }
  rep.audit.push_back({below ? "F ⊆ a - core D" : "F ⊆ a + core D", "verified", ""});

  const SetExpr shifted = SetExpr::shift(a, SetExpr::negate(d));
  const double expected = below ? -1.0 : 1.0;
  const std::string tag = below ? "bound-anchor-below" : "bound-anchor-above";
  bool anchors_ok = true;
  std::string anchor_witness;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vector k = below ? Vector(a - f[i]) : Vector(f[i] - a);
    const PhiProblem phi(shifted, k);
    std::vector<ExtScalar> vals;
    vals.reserve(f.size());
    for (const Vector& y : f.points()) vals.push_back(phi_value(phi, y));
    const ExtScalar self = vals[i];
    rep.values.push_back(self);
    if (!self.is_real()) throw std::logic_error("bound_scalarize: phi not finite at the anchor");
    const double v0 = self.value();
    if (std::abs(v0 - expected) > kAnchorTol && anchors_ok) {
      anchors_ok = false;
      anchor_witness = "index " + std::to_string(i) + " value " + self.to_string();
    }
    double min_val = v0;
    bool strict = true;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (!vals[j].is_real()) throw std::logic_error("bound_scalarize: phi not finite on F");
      min_val = std::min(min_val, vals[j].value());
      if (j != i && !same_point(f[i], f[j]) && !(v0 < vals[j].value() - kStrict)) strict = false;
    }
    std::string verdict = "not-weakly-efficient";
    if (v0 <= min_val + kStrict) verdict = strict ? "efficient" : "weakly-efficient";
    rep.verdicts.push_back({i, verdict, tag, v0, min_val});
  }
  rep.audit.push_back({std::string("phi_{a-D,k}(y0) = ") + (below ? "-1" : "1") + " with k = " +
                           (below ? "a - y0" : "y0 - a"),
                       anchors_ok ? "verified" : "failed", anchor_witness});
  fill_sets_from_verdicts(rep);
  for (std::size_t i : rep.weakly_efficient) rep.argmin.push_back(i);
  return rep;
}

ScalarReport norm_characterize(const PointCloud& f, const SetExpr& d, const Vector& a,
                               const AuditOptions& opts) {
  require_cloud_dim(f, d, "norm_characterize");
  require_dim(d, a, "norm_characterize");
  ScalarReport rep;
  rep.method = "norm";
  rep.seed = opts.seed;
  const ConeFlags flags = compute_flags(d);
  require_closed_convex_cone(d, flags, rep);
  if (flags.pointed != Tri::True) throw Refusal("D pointed not certified");
  rep.audit.push_back({"D pointed", "verified", ""});
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!safe_core(d, Vector(f[i] - a)))
      throw Refusal("F ⊆ a + core D violated at index " + std::to_string(i));
  rep.audit.push_back({"F ⊆ a + core D", "verified", ""});

  bool anchors_ok = true;
  std::string anchor_witness;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const OrderUnitSpec spec = OrderUnitSpec::make(d, Vector(f[i] - a));
    std::vector<double> norms;
    norms.reserve(f.size());
    for (const Vector& y : f.points()) norms.push_back(order_unit_norm(spec, Vector(y - a)));
    const double n0 = norms[i];
    rep.values.push_back(ExtScalar::real(n0));
    if (std::abs(n0 - 1.0) > kAnchorTol && anchors_ok) {
      anchors_ok = false;
      anchor_witness = "index " + std::to_string(i) + " norm " + std::to_string(n0);
    }
    double min_val = n0;
    bool strict = true;
    for (std::size_t j = 0; j < f.size(); ++j) {
      min_val = std::min(min_val, norms[j]);
      if (j != i && !same_point(f[i], f[j]) && !(n0 < norms[j] - kStrict)) strict = false;
    }
    std::string verdict = "not-weakly-efficient";
    if (n0 <= min_val + kStrict) verdict = strict ? "efficient" : "weakly-efficient";
    rep.verdicts.push_back({i, verdict, "order-unit-norm-anchor", n0, min_val});
  }
  rep.audit.push_back({"||y0 - a||_{D,k} = 1 with k = y0 - a", anchors_ok ? "verified" : "failed",
                       anchor_witness});
  fill_sets_from_verdicts(rep);
  for (std::size_t i : rep.weakly_efficient) rep.argmin.push_back(i);
  return rep;
}

SeparationResult separate(const SetExpr& a, const Vector& k, const PointCloud& d_points,
                          const AuditOptions& opts) {
  if (d_points.dim() != a.dim()) throw InputError("separate: dimension mismatch");
  require_dim(a, k, "separate");
  if (!is_closed(a)) throw Refusal("A closed (k-directionally closed) not certified");
  if (!certifies_minus_recession(a, k)) throw Refusal("k ∈ −0⁺A not certified");
  SeparationResult out;
  out.seed = opts.seed;
  out.audit.push_back({"A closed and k ∈ −0⁺A", "verified", ""});
  const PhiProblem phi(a, k);
  for (std::size_t i = 0; i < d_points.size(); ++i) {
    out.values.push_back(phi_value(phi, d_points[i]));
    if (!out.witness && out.values.back().le(0.0)) out.witness = i;
    if (!out.core_witness && out.values.back().lt(0.0)) out.core_witness = i;
  }
  out.verdict = out.witness ? "intersecting" : "disjoint";

  Rng rng(opts.seed);
  AuditEntry core = audit_ray_into_core("A - R_> k ⊆ core A", a, k, -1.0, rng, opts.probes);
  out.audit.push_back(core);
  if (!core.ok())
    out.core_verdict = "not_assessed";
  else
    out.core_verdict = out.core_witness ? "core_intersecting" : "disjoint_core";
  return out;
}

}  // namespace uslev
