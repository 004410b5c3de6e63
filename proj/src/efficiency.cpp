#include "uslev/efficiency.hpp"

#include <algorithm>
#include <set>

#include "uslev/sampling.hpp"

namespace uslev {

bool EffResult::contains(std::size_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::vector<std::size_t> eff_by(std::span<const Vector> points,
                                const DominancePredicate& dominates) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (j == i || same_point(points[i], points[j])) continue;
      dominated = dominates(points[i] - points[j]);
    }
    if (!dominated) kept.push_back(i);
  }
  return kept;
}

namespace {

EffResult tagged(std::vector<std::size_t> idx, const std::string& tag) {
  EffResult r;
  r.indices = std::move(idx);
  r.certificates.assign(r.indices.size(), tag);
  return r;
}

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string format_indices(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

EffResult eff(const PointCloud& f, const SetExpr& d, double tol) {
  if (f.dim() != d.dim()) throw InputError("eff: cloud and domination set dimensions differ");
  return tagged(eff_by(f.points(), [&](const Vector& diff) { return contains(d, diff, tol); }),
                "pairwise");
}

EffResult weff(const PointCloud& f, const SetExpr& d, double margin) {
  if (f.dim() != d.dim()) throw InputError("weff: cloud and domination set dimensions differ");
  return tagged(
      eff_by(f.points(), [&](const Vector& diff) { return contains_core(d, diff, margin); }),
      "pairwise-core");
}

ScalarFilterResult scalar_filter(const PointCloud& f, std::span<const ExtScalar> values,
                                 const SetExpr& d, Monotonicity monotonicity) {
  if (values.size() != f.size()) throw InputError("scalar_filter: values not aligned with cloud");
  ScalarFilterResult out;
  const bool any_neg_inf =
      std::any_of(values.begin(), values.end(), [](const ExtScalar& v) { return v.is_neg_inf(); });
  std::optional<double> best;
  for (const ExtScalar& v : values)
    if (v.is_real() && (!best || v.value() < *best)) best = v.value();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const ExtScalar& v = values[i];
    if (any_neg_inf ? v.is_neg_inf() : (v.is_real() && v.value() <= *best + 1e-9))
      out.argmin.push_back(i);
  }
  if (out.argmin.empty()) {
    out.classification = "empty";
    out.warnings.push_back("all values are nu: no point of F lies in the domain");
    return out;
  }
  if (monotonicity == Monotonicity::Strict) {
    out.classification = "argmin-subset-of-eff";
    out.result = tagged(out.argmin, "strictly-monotone-minimizer");
    return out;
  }
  if (monotonicity == Monotonicity::Monotone && out.argmin.size() == 1) {
    out.classification = "unique-minimizer-efficient";
    out.result = tagged(out.argmin, "monotone-unique-minimizer");
    return out;
  }
  const PointCloud sub = f.subset(out.argmin);
  const EffResult local = eff(sub, d);
  std::vector<std::size_t> mapped;
  for (std::size_t j : local.indices) mapped.push_back(out.argmin[j]);
  if (monotonicity == Monotonicity::Monotone) {
    out.classification = "eff-of-argmin";
    out.result = tagged(mapped, "monotone-argmin-restriction");
  } else {
    out.classification = "eff-of-argmin-uncertified";
    out.result = tagged(mapped, "argmin-restriction");
    out.warnings.push_back("no monotonicity declared: Eff(argmin, D) may contain inefficient points");
  }
  return out;
}

bool AlgebraReport::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

AlgebraReport eff_algebra_check(const PointCloud& f, const SetExpr& d, Rng& rng,
                                const AlgebraOptions& opts) {
  if (f.dim() != d.dim()) throw InputError("eff_algebra_check: dimension mismatch");
  AlgebraReport report;
  const auto in_d = [&](const Vector& v) { return contains(d, v); };
  const auto in_core = [&](const Vector& v) { return contains_core(d, v); };
  const auto is_zero = [](const Vector& v) { return v.lpNorm<Eigen::Infinity>() <= 1e-12; };
  const std::vector<std::size_t> base = eff_by(f.points(), in_d);
  const std::vector<std::size_t> base_weak = eff_by(f.points(), in_core);
  const ConeFlags flags = compute_flags(d);

  {
    CheckItem c{"eff-invariant-under-zero", true, 2, "", ""};
    const auto with_zero = eff_by(f.points(), [&](const Vector& v) { return in_d(v) || is_zero(v); });
    const auto without_zero =
        eff_by(f.points(), [&](const Vector& v) { return in_d(v) && !is_zero(v); });
    if (with_zero != base || without_zero != base) {
      c.passed = false;
      c.witness = "Eff(F,D)=" + format_indices(base) + " D∪{0}:" + format_indices(with_zero) +
                  " D\\{0}:" + format_indices(without_zero);
    }
    report.items.push_back(c);
  }

  const SetSampler d_sampler(d);
  {
    CheckItem c{"augmentation-invariance", true, 0, "", ""};
    if (flags.pointed != Tri::True || flags.is_cone != Tri::True || flags.convex != Tri::True)
      c.note = "D is not certified to be a pointed convex cone; the identity may fail "
               "(non-pointed cones admit counterexamples)";
    std::vector<Vector> aug(f.points().begin(), f.points().end());
    std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
    const auto draws = d_sampler.probes(rng, opts.augmentations * 2);
    for (const Vector& dv : draws) {
      if (c.trials >= opts.augmentations) break;
      // below the membership tolerance scale d cannot be told apart from 0
      if (dv.lpNorm<Eigen::Infinity>() <= 1e-6) continue;
      aug.push_back(f[pick(rng)] + dv);
      ++c.trials;
    }
    const auto augmented = eff_by(aug, in_d);
    if (augmented != base) {
      c.passed = false;
      c.witness = "Eff(F,D)=" + format_indices(base) + " Eff(F∪aug,D)=" + format_indices(augmented);
    }
    report.items.push_back(c);
  }

  auto slice_check = [&](const std::string& name, const std::vector<std::size_t>& full,
                         const std::function<bool(const Vector&)>& pred) {
    CheckItem c{name, true, 0, "", ""};
    std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
    const auto draws = d_sampler.draw_n(rng, opts.slices);
    for (std::size_t s = 0; s < opts.slices; ++s) {
      Vector y = f[pick(rng)];
      if (s < draws.size()) y += draws[s];
      std::vector<std::size_t> slice;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (in_d(Vector(y - f[i]))) slice.push_back(i);
      ++c.trials;
      std::vector<Vector> sub;
      for (std::size_t i : slice) sub.push_back(f[i]);
      std::vector<std::size_t> lhs;
      for (std::size_t j : eff_by(sub, pred)) lhs.push_back(slice[j]);
      const auto rhs = intersect_sorted(full, slice);
      if (lhs != rhs) {
        c.passed = false;
        c.witness = "y=" + format_point(y) + " lhs=" + format_indices(lhs) +
                    " rhs=" + format_indices(rhs);
        break;
      }
    }
    report.items.push_back(c);
  };
  slice_check("slice-eff", base, in_d);
  slice_check("slice-weff", base_weak, in_core);

  {
    CheckItem c{"eff-avoids-core-of-F+D", true, 0, "", ""};
    c.note = "core(F+D) approximated by the union of the cores of y + D";
    for (std::size_t i : base) {
      ++c.trials;
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (in_core(Vector(f[i] - f[j]))) {
          c.passed = false;
          c.witness = "efficient point " + std::to_string(i) + " in core of " +
                      std::to_string(j) + " + D";
          break;
        }
      }
      if (!c.passed) break;
    }
    report.items.push_back(c);
  }

  {
    CheckItem c{"weff-equals-F-minus-core(F+D)", true, f.size(), "", ""};
    c.note = "instance check with the union-of-cores approximation";
    if (flags.is_cone != Tri::True || flags.convex != Tri::True)
      c.note += "; D is not certified to be a convex cone";
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < f.size(); ++i) {
      bool in_core_union = false;
      for (std::size_t j = 0; j < f.size() && !in_core_union; ++j)
        in_core_union = in_core(Vector(f[i] - f[j]));
      if (!in_core_union) outside.push_back(i);
    }
    if (outside != base_weak) {
      c.passed = false;
      c.witness = "WEff=" + format_indices(base_weak) + " F\\core(F+D)=" + format_indices(outside);
    }
    report.items.push_back(c);
  }
  return report;
}

}  // namespace uslev
