#include "uslev/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>

#include "uslev/efficiency.hpp"
#include "uslev/norms.hpp"
#include "uslev/order.hpp"
#include "uslev/sampling.hpp"
#include "uslev/scalarize.hpp"

namespace uslev {

// ---- random instances -----------------------------------------------------

namespace {

Vector gaussian(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = n(rng);
  return v;
}

Vector uniform_box(std::size_t dim, double radius, Rng& rng) {
  std::uniform_real_distribution<double> u(-radius, radius);
  Vector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = u(rng);
  return v;
}

}  // namespace

DirectedPolyhedron random_directed_polyhedron(std::size_t dim, Rng& rng) {
  Vector k = gaussian(dim, rng);
  while (k.norm() < 0.3) k = gaussian(dim, rng);
  const double kk = k.squaredNorm();
  std::uniform_int_distribution<std::size_t> rows_dist(1, 2 * dim + 1);
  std::uniform_real_distribution<double> slope(0.2, 1.0), offset(-2.0, 2.0), coin(0.0, 1.0);
  const std::size_t m = rows_dist(rng);
  const std::size_t orth_row = coin(rng) < 0.3 ? 0 : m;  // row 0 orthogonal to k, or none
  Matrix normals(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(dim));
  Vector offsets(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    Vector g = gaussian(dim, rng);
    if (i == orth_row) {
      // k_j e_i - k_i e_j: the dot product with k cancels exactly in floating point
      std::uniform_int_distribution<Eigen::Index> idx(0, static_cast<Eigen::Index>(dim) - 1);
      Eigen::Index a = idx(rng), b = idx(rng);
      while (b == a || (k(a) == 0.0 && k(b) == 0.0)) {
        a = idx(rng);
        b = idx(rng);
      }
      g.setZero();
      g(a) = k(b);
      g(b) = -k(a);
    } else {
      g -= (g.dot(k) / kk) * k;
      while (g.norm() < 1e-3) {
        g = gaussian(dim, rng);
        g -= (g.dot(k) / kk) * k;
      }
      g += (slope(rng) / kk) * k;
    }
    normals.row(static_cast<Eigen::Index>(i)) = g.transpose();
    offsets(static_cast<Eigen::Index>(i)) = offset(rng);
  }
  return {SetExpr::halfspaces(std::move(normals), std::move(offsets)), std::move(k)};
}

SetExpr random_pointed_cone(std::size_t dim, Rng& rng) {
  std::uniform_int_distribution<std::size_t> extra(0, 2);
  std::uniform_real_distribution<double> entry(0.05, 1.0);
  const std::size_t m = dim + extra(rng);
  Matrix g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = entry(rng);
  return SetExpr::halfspaces(-g, Vector::Zero(static_cast<Eigen::Index>(m)));
}

PointCloud random_cloud(std::size_t dim, std::size_t max_points, Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(std::max<std::size_t>(2, max_points / 4),
                                                   std::max<std::size_t>(2, max_points));
  std::uniform_int_distribution<int> grid(0, 5);
  std::uniform_real_distribution<double> noise(-0.5, 0.5), coin(0.0, 1.0);
  const std::size_t n = count(rng);
  const bool integer = coin(rng) < 0.5;
  std::vector<Vector> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector v(static_cast<Eigen::Index>(dim));
    if (integer) {
      for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = grid(rng);
    } else {
      v = gaussian(dim, rng).cwiseAbs();
      if (v.norm() < 1e-6) v.setOnes();
      v = v.normalized() * (3.0 + noise(rng));
    }
    pts.push_back(std::move(v));
  }
  return PointCloud(std::move(pts));
}

// ---- property suites ------------------------------------------------------

bool CheckSummary::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"extvalues", "sets",       "phi",      "norms",
                                              "order",     "efficiency", "scalarize"};
  return names;
}

namespace {

/// Accumulates trials of one property and keeps the first failure.
class Property {
 public:
  Property(CheckSummary& out, std::string suite, std::string name) : out_(out) {
    r_.suite = std::move(suite);
    r_.property = std::move(name);
  }
  ~Property() { out_.results.push_back(r_); }
  Property(const Property&) = delete;
  Property& operator=(const Property&) = delete;

  template <class Witness>
  void trial(bool ok, Witness&& witness) {
    ++r_.trials;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.witness = witness();
    }
  }
  bool failed() const { return !r_.passed; }

 private:
  CheckSummary& out_;
  PropertyResult r_;
};

std::string ext_str(const ExtScalar& v) { return v.to_string(); }

bool ext_close(const ExtScalar& a, const ExtScalar& b, double tol) {
  if (a.kind() != b.kind()) return false;
  return !a.is_real() || std::abs(a.value() - b.value()) <= tol;
}

std::size_t pick_dim(Rng& rng) { return std::uniform_int_distribution<std::size_t>(2, 4)(rng); }

ExtScalar random_ext(Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_real_distribution<double> val(-1e3, 1e3);
  const int c = kind(rng);
  if (c == 0) return ExtScalar::nu();
  if (c == 1) return ExtScalar::neg_inf();
  return ExtScalar::real(val(rng));
}

std::int64_t ulp_distance(double a, double b) {
  std::int64_t ia, ib;
  std::memcpy(&ia, &a, sizeof a);
  std::memcpy(&ib, &b, sizeof b);
  if (ia < 0) ia = std::numeric_limits<std::int64_t>::min() - ia;
  if (ib < 0) ib = std::numeric_limits<std::int64_t>::min() - ib;
  return ia > ib ? ia - ib : ib - ia;
}

void suite_extvalues(const CheckOptions& o, CheckSummary& out) {
  Rng rng(o.seed);
  std::uniform_real_distribution<double> t(-1e3, 1e3);
  std::uniform_int_distribution<int> eighths(-8000, 8000);
  std::uniform_real_distribution<double> lam(0.1, 10.0);
  {
    Property p(out, "extvalues", "le-gt-exclusive-except-nu");
    for (std::size_t i = 0; i < o.size; ++i) {
      const ExtScalar v = random_ext(rng);
      const double s = t(rng);
      const bool le = ext_le(v, s), gt = ext_gt(v, s);
      p.trial(v.is_nu() ? (!le && !gt) : (le != gt),
              [&] { return "v=" + ext_str(v) + " t=" + std::to_string(s); });
    }
  }
  {
    // dyadic arguments keep both sides exactly representable
    Property p(out, "extvalues", "add-associative");
    for (std::size_t i = 0; i < o.size; ++i) {
      const ExtScalar base = random_ext(rng);
      const ExtScalar v = base.is_real() ? ExtScalar::real(eighths(rng) / 8.0) : base;
      const double s = eighths(rng) / 8.0, u = eighths(rng) / 8.0;
      const ExtScalar lhs = ext_add(ext_add(v, s), u), rhs = ext_add(v, s + u);
      p.trial(lhs.same_as(rhs), [&] { return ext_str(lhs) + " vs " + ext_str(rhs); });
    }
  }
  {
    Property p(out, "extvalues", "scale-composes");
    for (std::size_t i = 0; i < o.size; ++i) {
      const ExtScalar v = random_ext(rng);
      const double a = lam(rng), b = lam(rng);
      const ExtScalar lhs = ext_scale(ext_scale(v, a), b), rhs = ext_scale(v, a * b);
      const bool ok = lhs.kind() == rhs.kind() &&
                      (!lhs.is_real() || ulp_distance(lhs.value(), rhs.value()) <= 2);
      p.trial(ok, [&] { return ext_str(lhs) + " vs " + ext_str(rhs); });
    }
  }
}

void suite_sets(const CheckOptions& o, CheckSummary& out) {
  Rng rng(o.seed + 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto random_set = [&](std::size_t dim) -> SetExpr {
    const double c = coin(rng);
    if (c < 0.4) return random_directed_polyhedron(dim, rng).set;
    if (c < 0.6) return SetExpr::orthant(dim, c < 0.5 ? OrthantSign::NonNeg : OrthantSign::NonPos);
    if (c < 0.8)
      return SetExpr::union_of({random_directed_polyhedron(dim, rng).set,
                                SetExpr::shift(uniform_box(dim, 2.0, rng),
                                               SetExpr::orthant(dim, OrthantSign::NonPos))});
    return SetExpr::negate(SetExpr::shift(uniform_box(dim, 2.0, rng), random_pointed_cone(dim, rng)));
  };
  {
    Property p(out, "sets", "core-implies-contains");
    for (std::size_t i = 0; i < o.size; ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr s = random_set(dim);
      const Vector y = uniform_box(dim, 5.0, rng);
      p.trial(!contains_core(s, y) || contains(s, y), [&] { return format_point(y); });
    }
  }
  {
    Property p(out, "sets", "double-negation");
    for (std::size_t i = 0; i < o.size; ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr s = random_set(dim);
      const SetExpr nn = SetExpr::negate(SetExpr::negate(s));
      const Vector y = uniform_box(dim, 5.0, rng);
      p.trial(contains(s, y) == contains(nn, y), [&] { return format_point(y); });
    }
  }
  {
    Property p(out, "sets", "recession-direction-ray");
    for (std::size_t i = 0; i < o.size; ++i) {
      const std::size_t dim = pick_dim(rng);
      const auto [s, k] = random_directed_polyhedron(dim, rng);
      if (!classify_direction(s, k).in_minus_recession) {
        p.trial(false, [&] { return "k not classified in -0+A: " + format_point(k); });
        continue;
      }
      const auto a = SetSampler(s).draw(rng);
      if (!a) continue;
      for (double t : {0.1, 1.0, 10.0}) {
        const Vector y = *a - t * k;
        p.trial(contains(s, y), [&] { return "a=" + format_point(*a) + " t=" + std::to_string(t); });
      }
    }
  }
}

void suite_phi(const CheckOptions& o, CheckSummary& out) {
  Rng rng(o.seed + 2);
  std::uniform_real_distribution<double> tdist(-10.0, 10.0);
  const PhiEvaluator& phi = o.phi;
  auto instance = [&] {
    const std::size_t dim = pick_dim(rng);
    return random_directed_polyhedron(dim, rng);
  };
  {
    Property p(out, "phi", "translation-invariance");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      const PhiProblem pr(a, k);
      const Vector y = uniform_box(a.dim(), 5.0, rng);
      const double t = tdist(rng);
      const ExtScalar lhs = phi(pr, Vector(y + t * k)), rhs = ext_add(phi(pr, y), t);
      p.trial(ext_close(lhs, rhs, 1e-8), [&] {
        return "y=" + format_point(y) + " t=" + std::to_string(t) + ": " + ext_str(lhs) +
               " vs " + ext_str(rhs);
      });
    }
  }
  {
    Property p(out, "phi", "direction-scaling");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      const Vector y = uniform_box(a.dim(), 5.0, rng);
      const PhiProblem base(a, k);
      const ExtScalar v = phi(base, y);
      for (double lam : {0.5, 2.0, 7.0}) {
        const ExtScalar lhs = phi(PhiProblem(a, Vector(lam * k)), y), rhs = ext_scale(v, lam);
        p.trial(ext_close(lhs, rhs, 1e-8), [&] {
          return "y=" + format_point(y) + " lambda=" + std::to_string(lam) + ": " + ext_str(lhs) +
                 " vs " + ext_str(rhs);
        });
      }
    }
  }
  {
    Property p(out, "phi", "direction-shift");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      const Vector y = uniform_box(a.dim(), 5.0, rng);
      const double c = tdist(rng);
      const ExtScalar lhs = phi(PhiProblem(SetExpr::shift(c * k, a), k), y);
      const ExtScalar rhs = ext_add(phi(PhiProblem(a, k), y), -c);
      p.trial(ext_close(lhs, rhs, 1e-8), [&] {
        return "y=" + format_point(y) + " c=" + std::to_string(c) + ": " + ext_str(lhs) + " vs " +
               ext_str(rhs);
      });
    }
  }
  {
    Property p(out, "phi", "point-shift");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      const Vector y = uniform_box(a.dim(), 5.0, rng);
      const Vector y0 = uniform_box(a.dim(), 3.0, rng);
      const ExtScalar lhs = phi(PhiProblem(SetExpr::shift(y0, a), k), y);
      const ExtScalar rhs = phi(PhiProblem(a, k), Vector(y - y0));
      p.trial(ext_close(lhs, rhs, 1e-8), [&] {
        return "y=" + format_point(y) + " y0=" + format_point(y0) + ": " + ext_str(lhs) + " vs " +
               ext_str(rhs);
      });
    }
  }
  {
    Property p(out, "phi", "sublevel-identity");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      const PhiProblem pr(a, k);
      const Vector y = uniform_box(a.dim(), 5.0, rng);
      const double t = tdist(rng);
      const ExtScalar v = phi(pr, y);
      p.trial(ext_le(v, t) == sublevel_contains(pr, y, t), [&] {
        return "y=" + format_point(y) + " t=" + std::to_string(t) + " phi=" + ext_str(v);
      });
    }
  }
  {
    Property p(out, "phi", "oracle-agreement");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      const PhiProblem pr(a, k);
      const Vector y = uniform_box(a.dim(), 5.0, rng);
      const ExtScalar fast = phi(pr, y), slow = phi_oracle(pr, y);
      p.trial(ext_close(fast, slow, 1e-6), [&] {
        return "y=" + format_point(y) + ": " + ext_str(fast) + " vs oracle " + ext_str(slow);
      });
    }
  }
  {
    Property p(out, "phi", "convexity-midpoint");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      const PhiProblem pr(a, k);
      const Vector y1 = uniform_box(a.dim(), 5.0, rng), y2 = uniform_box(a.dim(), 5.0, rng);
      const ExtScalar v1 = phi(pr, y1), v2 = phi(pr, y2);
      if (!v1.is_real() || !v2.is_real()) continue;
      const ExtScalar mid = phi(pr, Vector(0.5 * (y1 + y2)));
      p.trial(mid.le(0.5 * (v1.value() + v2.value()) + 1e-9), [&] {
        return "y1=" + format_point(y1) + " y2=" + format_point(y2) + " mid=" + ext_str(mid);
      });
    }
  }
  {
    Property p(out, "phi", "sublinearity-on-cones");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr d = random_pointed_cone(dim, rng);
      const SetExpr a = SetExpr::negate(d);  // -D with k = 1 in core D
      const Vector k = Vector::Ones(static_cast<Eigen::Index>(dim));
      const PhiProblem pr(a, k);
      const Vector y1 = uniform_box(dim, 5.0, rng), y2 = uniform_box(dim, 5.0, rng);
      const double lam = std::uniform_real_distribution<double>(0.1, 10.0)(rng);
      const ExtScalar v1 = phi(pr, y1), v2 = phi(pr, y2);
      const ExtScalar vl = phi(pr, Vector(lam * y1)), vs = phi(pr, Vector(y1 + y2));
      const bool ok = v1.is_real() && v2.is_real() && vl.is_real() && vs.is_real() &&
                      std::abs(vl.value() - lam * v1.value()) <= 1e-9 * (1.0 + std::abs(vl.value())) &&
                      vs.value() <= v1.value() + v2.value() + 1e-9;
      p.trial(ok, [&] { return "y1=" + format_point(y1) + " y2=" + format_point(y2); });
    }
  }
  {
    Property p(out, "phi", "recession-monotonicity");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      const PhiProblem pr(a, k);
      const auto u = SetSampler(recession_cone(a)).draw(rng);
      if (!u) continue;
      const Vector y1 = uniform_box(a.dim(), 5.0, rng);
      const Vector y2 = y1 - *u;  // y2 - y1 in -0+A
      const ExtScalar v1 = phi(pr, y1), v2 = phi(pr, y2);
      // y2 in dom forces y1 in dom; nothing is claimed when y2 is outside
      const bool ok = v2.is_nu() ||
                      (!v1.is_nu() && (v1.is_neg_inf() || (v2.is_real() && v1.value() <= v2.value() + 1e-9)));
      p.trial(ok, [&] {
        return "y1=" + format_point(y1) + " y2=" + format_point(y2) + ": " + ext_str(v1) + " vs " +
               ext_str(v2);
      });
    }
  }
  {
    Property p(out, "phi", "strict-core-recession-monotonicity");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      const PhiProblem pr(a, k);
      const SetExpr rec = recession_cone(a);
      const auto u = SetSampler(rec).draw(rng);
      if (!u || !contains_core(rec, *u)) continue;
      const Vector y1 = uniform_box(a.dim(), 5.0, rng);
      const Vector y2 = y1 - *u;  // y2 - y1 in -core 0+A
      const ExtScalar v1 = phi(pr, y1), v2 = phi(pr, y2);
      if (!v1.is_real() || !v2.is_real()) continue;
      p.trial(v1.value() < v2.value(), [&] {
        return "y1=" + format_point(y1) + " y2=" + format_point(y2) + ": " + ext_str(v1) + " vs " +
               ext_str(v2);
      });
    }
  }
  {
    Property p(out, "phi", "recession-inequality");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      const PhiProblem pr(a, k);
      const PhiProblem rec(recession_cone(a), k);
      const auto u = SetSampler(recession_cone(a)).draw(rng);
      if (!u) continue;
      const Vector y0 = uniform_box(a.dim(), 5.0, rng);
      const Vector y1 = *u + tdist(rng) * k;
      const ExtScalar v0 = phi(pr, y0), r1 = phi(rec, y1), lhs = phi(pr, Vector(y0 + y1));
      if (v0.is_nu()) continue;
      const bool ok = (v0.is_neg_inf() || r1.is_neg_inf())
                          ? lhs.is_neg_inf()
                          : r1.is_real() && lhs.le(v0.value() + r1.value() + 1e-9);
      p.trial(ok, [&] {
        return "y0=" + format_point(y0) + " y1=" + format_point(y1) + ": " + ext_str(lhs) +
               " vs " + ext_str(v0) + " + " + ext_str(r1);
      });
    }
  }
  {
    Property p(out, "phi", "finite-for-core-directions");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const auto [a, k] = instance();
      if (!classify_direction(a, k).in_minus_core_recession) continue;
      const PhiProblem pr(a, k);
      const Vector y = uniform_box(a.dim(), 10.0, rng);
      const ExtScalar v = phi(pr, y);
      p.trial(v.is_real(), [&] { return "y=" + format_point(y) + " phi=" + ext_str(v); });
    }
  }
}

void suite_norms(const CheckOptions& o, CheckSummary& out) {
  Rng rng(o.seed + 3);
  {
    Property p(out, "norms", "gauge-equals-positive-part-of-phi");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr c = SetExpr::negate(random_pointed_cone(dim, rng));
      const Vector k = Vector::Ones(static_cast<Eigen::Index>(dim));
      const Vector y = uniform_box(dim, 5.0, rng);
      const ExtScalar g = minkowski_eval(SetExpr::shift(k, c), y);
      const ExtScalar v = o.phi(PhiProblem(c, k), y);
      const bool ok = g.is_real() && v.is_real() && std::abs(g.value() - std::max(v.value(), 0.0)) <= 1e-8;
      p.trial(ok, [&] { return "y=" + format_point(y) + ": " + ext_str(g) + " vs " + ext_str(v); });
    }
  }
  {
    Property p(out, "norms", "norm-axioms");
    for (std::size_t i = 0; i < o.size && !p.failed(); ++i) {
      const std::size_t dim = pick_dim(rng);
      const OrderUnitSpec spec =
          OrderUnitSpec::make(random_pointed_cone(dim, rng), Vector::Ones(static_cast<Eigen::Index>(dim)));
      const Vector y = uniform_box(dim, 5.0, rng), z = uniform_box(dim, 5.0, rng);
      const double lam = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);
      const double ny = order_unit_norm(spec, y), nz = order_unit_norm(spec, z);
      const bool homogeneous =
          std::abs(order_unit_norm(spec, Vector(lam * y)) - std::abs(lam) * ny) <= 1e-9 * (1.0 + ny);
      const bool triangle = order_unit_norm(spec, Vector(y + z)) <= ny + nz + 1e-9;
      const bool zero = order_unit_norm(spec, Vector::Zero(static_cast<Eigen::Index>(dim))) == 0.0 &&
                        (ny > 1e-9 || y.lpNorm<Eigen::Infinity>() <= 1e-9);
      p.trial(homogeneous && triangle && zero,
              [&] { return "y=" + format_point(y) + " z=" + format_point(z); });
    }
  }
  {
    Property p(out, "norms", "norm-phi-coincidence-on-a+C");
    for (std::size_t i = 0; i < std::max<std::size_t>(o.size / 20, o.size ? 1 : 0) && !p.failed(); ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr c = random_pointed_cone(dim, rng);
      const OrderUnitSpec spec = OrderUnitSpec::make(c, Vector::Ones(static_cast<Eigen::Index>(dim)));
      const Vector a = uniform_box(dim, 3.0, rng);
      std::vector<Vector> ys;
      for (const Vector& d : SetSampler(c).draw_n(rng, 20)) ys.push_back(a + d);
      const CoincidenceReport rep = norm_phi_coincidence_check(spec, a, ys);
      p.trial(rep.passed, [&] {
        return "y=" + format_point(rep.worst_point) + " diff=" + std::to_string(rep.max_diff);
      });
    }
  }
  {
    // the identity is specific to a + C: off that set a strict gap must exist
    Property p(out, "norms", "coincidence-fails-off-a+C");
    if (o.size > 0) {
      const SetExpr c = SetExpr::orthant(2, OrthantSign::NonNeg);
      const Vector k = Vector::Ones(2), a = -Vector::Ones(2);
      const OrderUnitSpec spec = OrderUnitSpec::make(c, k);
      const PhiProblem shifted(SetExpr::shift(a, SetExpr::negate(c)), k);
      bool found = false;
      for (std::size_t i = 0; i < o.size && !found; ++i) {
        const Vector y = uniform_box(2, 5.0, rng);
        if (contains(c, Vector(y - a))) continue;
        const ExtScalar v = o.phi(shifted, y);
        found = v.is_real() && std::abs(order_unit_norm(spec, Vector(y - a)) - v.value()) > 1e-6;
      }
      p.trial(found, [] { return std::string("no point outside a + C with a gap was found"); });
    }
  }
}

void suite_order(const CheckOptions& o, CheckSummary& out) {
  Rng rng(o.seed + 4);
  const std::size_t clouds = std::max<std::size_t>(o.size / 20, o.size ? 1 : 0);
  {
    Property p(out, "order", "min-equals-eff-of-D-minus-(-D)");
    for (std::size_t i = 0; i < clouds && !p.failed(); ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr d = (i % 2) ? random_pointed_cone(dim, rng) : SetExpr::orthant(dim, OrthantSign::NonNeg);
      const PointCloud f = random_cloud(dim, 40, rng);
      const auto lhs = min_points({d, false}, f), rhs = min_via_eff(d, f);
      p.trial(lhs == rhs, [&] { return "cloud " + std::to_string(i) + " of size " + std::to_string(f.size()); });
    }
  }
  {
    Property p(out, "order", "translation-compatible");
    for (std::size_t i = 0; i < o.size; ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr d = random_pointed_cone(dim, rng);
      const Vector y1 = uniform_box(dim, 5.0, rng), y2 = uniform_box(dim, 5.0, rng);
      const Vector s = uniform_box(dim, 5.0, rng);
      const DominationRelation r{d, false};
      p.trial(relation_holds(r, y1, y2) == relation_holds(r, Vector(y1 + s), Vector(y2 + s)),
              [&] { return "y1=" + format_point(y1) + " y2=" + format_point(y2); });
    }
  }
  {
    Property p(out, "order", "reflexive-iff-zero-in-D");
    if (o.size > 0) {
      const std::vector<SetExpr> catalog{
          SetExpr::orthant(2, OrthantSign::NonNeg),
          SetExpr::shift(Vector::Ones(2), SetExpr::orthant(2, OrthantSign::NonNeg)),
          random_pointed_cone(3, rng)};
      for (const SetExpr& d : catalog) {
        const DominationRelation r{d, false};
        const SetSampler sampler(d);
        const RelationReport rep = relation_properties(r, sampler.as_source(), o.size, rng);
        const bool zero = contains(d, Vector::Zero(static_cast<Eigen::Index>(d.dim())));
        p.trial((rep.reflexive.verdict == Verdict::True) == zero,
                [&] { return "reflexive verdict disagrees with 0 in D"; });
      }
    }
  }
}

void suite_efficiency(const CheckOptions& o, CheckSummary& out) {
  Rng rng(o.seed + 5);
  const std::size_t clouds = std::max<std::size_t>(o.size / 20, o.size ? 1 : 0);
  auto domination = [&](std::size_t dim, std::size_t i) {
    return (i % 2) ? random_pointed_cone(dim, rng) : SetExpr::orthant(dim, OrthantSign::NonNeg);
  };
  {
    Property p(out, "efficiency", "eff-subset-of-weff");
    for (std::size_t i = 0; i < clouds; ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr d = domination(dim, i);
      const PointCloud f = random_cloud(dim, 40, rng);
      const auto e = eff(f, d).indices, w = weff(f, d).indices;
      p.trial(std::includes(w.begin(), w.end(), e.begin(), e.end()),
              [&] { return "cloud " + std::to_string(i); });
    }
  }
  {
    Property p(out, "efficiency", "smaller-D-keeps-efficient-points");
    for (std::size_t i = 0; i < clouds; ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr d = domination(dim, i);
      Matrix h = gaussian(dim, rng).transpose();
      const SetExpr d1 = intersect(d, SetExpr::halfspaces(h, Vector::Zero(1)));
      const PointCloud f = random_cloud(dim, 40, rng);
      const auto e = eff(f, d).indices, e1 = eff(f, d1).indices;
      p.trial(std::includes(e1.begin(), e1.end(), e.begin(), e.end()),
              [&] { return "cloud " + std::to_string(i); });
    }
  }
  {
    Property p(out, "efficiency", "permutation-invariance");
    for (std::size_t i = 0; i < clouds; ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr d = domination(dim, i);
      const PointCloud f = random_cloud(dim, 40, rng);
      std::vector<std::size_t> perm(f.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const PointCloud g = f.subset(perm);
      std::vector<std::size_t> mapped;
      for (std::size_t j : eff(g, d).indices) mapped.push_back(perm[j]);
      std::sort(mapped.begin(), mapped.end());
      p.trial(mapped == eff(f, d).indices, [&] { return "cloud " + std::to_string(i); });
    }
  }
  {
    Property p(out, "efficiency", "set-algebra-identities");
    for (std::size_t i = 0; i < clouds; ++i) {
      const std::size_t dim = pick_dim(rng);
      const SetExpr d = domination(dim, i);
      const PointCloud f = random_cloud(dim, 30, rng);
      const AlgebraReport rep = eff_algebra_check(f, d, rng);
      std::string failed;
      for (const CheckItem& c : rep.items)
        if (!c.passed) failed += c.name + " (" + c.witness + ") ";
      p.trial(rep.all_passed(), [&] { return failed; });
    }
  }
}

void suite_scalarize(const CheckOptions& o, CheckSummary& out) {
  Rng rng(o.seed + 6);
  const std::size_t clouds = std::max<std::size_t>(o.size / 20, o.size ? 1 : 0);
  struct Instance {
    SetExpr d;
    PointCloud f;
    Vector k;
  };
  auto instance = [&](std::size_t i) {
    const std::size_t dim = pick_dim(rng);
    SetExpr d = (i % 2) ? random_pointed_cone(dim, rng) : SetExpr::orthant(dim, OrthantSign::NonNeg);
    return Instance{d, random_cloud(dim, 40, rng), Vector::Ones(static_cast<Eigen::Index>(dim))};
  };
  {
    Property p(out, "scalarize", "characterizations-match-pairwise");
    for (std::size_t i = 0; i < clouds; ++i) {
      const Instance in = instance(i);
      const bool ok = characterize_eff(in.f, in.d, in.k).indices == eff(in.f, in.d).indices &&
                      characterize_weff(in.f, in.d, in.k).indices == weff(in.f, in.d).indices;
      p.trial(ok, [&] { return "cloud " + std::to_string(i); });
    }
  }
  {
    Property p(out, "scalarize", "bound-and-norm-drivers-match-weff");
    for (std::size_t i = 0; i < clouds; ++i) {
      const Instance in = instance(i);
      const auto w = weff(in.f, in.d).indices;
      Vector hi = in.f[0], lo = in.f[0];
      for (const Vector& y : in.f.points()) {
        hi = hi.cwiseMax(y);
        lo = lo.cwiseMin(y);
      }
      const ScalarReport below = bound_scalarize(in.f, in.d, Vector(hi.array() + 1.0), Orientation::Below);
      const ScalarReport norm = norm_characterize(in.f, in.d, Vector(lo.array() - 1.0));
      bool anchors = true;
      for (const PointVerdict& v : below.verdicts) anchors &= std::abs(*v.anchor + 1.0) <= 1e-9;
      for (const PointVerdict& v : norm.verdicts) anchors &= std::abs(*v.anchor - 1.0) <= 1e-9;
      p.trial(below.weakly_efficient == w && norm.weakly_efficient == w && anchors,
              [&] { return "cloud " + std::to_string(i); });
    }
  }
  {
    Property p(out, "scalarize", "reference-minimizers-weakly-efficient");
    for (std::size_t i = 0; i < clouds; ++i) {
      const Instance in = instance(i);
      const auto w = weff(in.f, in.d).indices;
      const auto e = eff(in.f, in.d).indices;
      const Vector a = uniform_box(in.d.dim(), 6.0, rng);
      const ScalarReport rep = reference_scalarize(in.f, in.d, a, in.k, in.d);
      bool ok = std::includes(w.begin(), w.end(), rep.argmin.begin(), rep.argmin.end());
      ok &= std::includes(e.begin(), e.end(), rep.efficient.begin(), rep.efficient.end());
      p.trial(ok, [&] { return "cloud " + std::to_string(i) + " a=" + format_point(a); });
    }
  }
  {
    Property p(out, "scalarize", "separation-matches-membership");
    for (std::size_t i = 0; i < clouds; ++i) {
      const std::size_t dim = pick_dim(rng);
      const Vector shift = uniform_box(dim, 2.0, rng);
      const SetExpr a = SetExpr::shift(shift, SetExpr::orthant(dim, OrthantSign::NonPos));
      std::vector<Vector> pts;
      for (int j = 0; j < 10; ++j) pts.push_back(uniform_box(dim, 5.0, rng));
      const PointCloud dpts(pts);
      bool truth = false;
      for (const Vector& y : pts) truth |= contains(a, y);
      const SeparationResult r = separate(a, Vector::Ones(static_cast<Eigen::Index>(dim)), dpts);
      p.trial((r.verdict == "intersecting") == truth, [&] { return "instance " + std::to_string(i); });
    }
  }
}

}  // namespace

CheckSummary run_checks(const std::string& suite, const CheckOptions& opts) {
  using Runner = void (*)(const CheckOptions&, CheckSummary&);
  static const std::vector<std::pair<std::string, Runner>> runners{
      {"extvalues", suite_extvalues}, {"sets", suite_sets},
      {"phi", suite_phi},             {"norms", suite_norms},
      {"order", suite_order},         {"efficiency", suite_efficiency},
      {"scalarize", suite_scalarize}};
  CheckSummary out;
  bool matched = false;
  for (const auto& [name, run] : runners)
    if (suite == "all" || suite == name) {
      matched = true;
      run(opts, out);
    }
  if (!matched) throw InputError("unknown suite \"" + suite + "\"");
  if (opts.size == 0) out.warnings.push_back("sample size 0: every property passes vacuously");
  return out;
}

}  // namespace uslev
