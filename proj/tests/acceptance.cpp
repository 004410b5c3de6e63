// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Instances come from generators local to this file; brute-force answers
// come from tests/oracles.hpp.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "uslev/efficiency.hpp"
#include "uslev/norms.hpp"
#include "uslev/order.hpp"
#include "uslev/phi.hpp"
#include "uslev/scalarize.hpp"

using namespace uslev;
using Idx = std::vector<std::size_t>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uni(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }

  Vector box(std::size_t dim, double r) {
    Vector v(static_cast<Eigen::Index>(dim));
    for (auto& x : v) x = uni(-r, r);
    return v;
  }

  // A = {y : <a_i,y> <= b_i} with <a_i,k> >= 0 for every row, so that
  // k in -0+A. Some rows are made orthogonal to k, sometimes all of them.
  std::pair<SetExpr, Vector> directed_polyhedron(std::size_t dim) {
    Vector k = box(dim, 1);
    k(0) += k(0) >= 0 ? 0.3 : -0.3;
    const bool flat = coin(0.08);
    const std::size_t m = dim + pick(0, 3);
    Matrix a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(dim));
    Vector b(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
      Vector row = box(dim, 1);
      const double target = flat || coin(0.15) ? 0.0 : uni(0.2, 1.0);
      row += (target - row.dot(k)) / k.squaredNorm() * k;
      if (target == 0.0) {
        // snap the residual of the projection to an exact zero on one coordinate
        Eigen::Index j;
        k.cwiseAbs().maxCoeff(&j);
        row(j) = 0.0;
        const double rest = row.dot(k);
        row(j) = -rest / k(j);
      }
      if (row.lpNorm<Eigen::Infinity>() < 1e-3) row(0) += 0.5;  // degenerate draw, rare
      a.row(static_cast<Eigen::Index>(i)) = row.transpose();
      b(static_cast<Eigen::Index>(i)) = uni(-2, 3);
    }
    return {SetExpr::halfspaces(a, b), k};
  }

  // {u : G u >= 0} with strictly positive G: pointed, the orthant inside its core
  Matrix cone_rows(std::size_t dim) {
    const std::size_t m = dim + pick(0, 2);
    Matrix g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(dim));
    for (auto& x : g.reshaped()) x = uni(0.05, 1.0);
    for (std::size_t j = 0; j < dim; ++j) g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) += 1.0;
    return g;
  }
  SetExpr pointed_cone(std::size_t dim) {
    const Matrix g = cone_rows(dim);
    return SetExpr::halfspaces(-g, Vector::Zero(g.rows()));
  }

  PointCloud cloud(std::size_t dim, std::size_t n, bool positive) {
    std::vector<Vector> pts;
    const bool grid = coin(0.4);
    for (std::size_t i = 0; i < n; ++i) {
      Vector v(static_cast<Eigen::Index>(dim));
      if (grid) {
        for (auto& x : v) x = static_cast<double>(pick(0, 6));
      } else {
        for (auto& x : v) x = std::abs(std::normal_distribution<double>()(rng));
        v *= uni(2.5, 3.5) / v.norm();
      }
      if (!positive) v.array() -= 2.0;
      pts.push_back(v);
    }
    return PointCloud(std::move(pts));
  }

  std::mt19937_64 rng;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Idx positions(const std::vector<PointVerdict>& vs, const char* a, const char* b = nullptr) {
  Idx out;
  for (const PointVerdict& v : vs)
    if (v.verdict == a || (b && v.verdict == b)) out.push_back(v.index);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

Outcome example_values() {
  const PhiProblem p(nonpos(2), V({1, 1}));
  const ExtScalar a = phi_eval(p, V({-1, -1})), b = phi_eval(p, V({-2, 0}));
  const bool rel = relation_holds({nonneg(2), false}, V({-1, -1}), V({-2, 0}));
  Outcome o;
  o.pass = a.same_as(ExtScalar::real(-1)) && b.same_as(ExtScalar::real(0)) && !rel;
  o.detail = "phi(-1,-1)=" + a.to_string() + " phi(-2,0)=" + b.to_string() +
             " relation=" + (rel ? "true" : "false");
  return o;
}

Outcome closed_form_vs_bisection() {
  Gen g(1002);
  int mismatched = 0, refused = 0;
  double worst = 0;
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    const auto [a, k] = g.directed_polyhedron(2 + i % 3);
    const PhiProblem p(a, k);
    const Vector y = g.box(a.dim(), 5);
    if (!certifies_minus_recession(a, k)) {
      ++refused;
      continue;
    }
    const ExtScalar c = phi_eval(p, y), o = phi_oracle(p, y);
    if (c.kind() != o.kind()) {
      ++mismatched;
      continue;
    }
    ++counts[c.is_real() ? 0 : c.is_neg_inf() ? 1 : 2];
    if (c.is_real()) worst = std::max(worst, std::abs(c.value() - o.value()));
  }
  Outcome out;
  out.pass = mismatched == 0 && refused == 0 && worst <= 1e-6;
  out.detail = "class mismatches=" + std::to_string(mismatched) + " uncertified=" + std::to_string(refused) +
               " max|diff|=" + fmt("%.2e", worst) + " (real/-inf/nu " + std::to_string(counts[0]) + "/" +
               std::to_string(counts[1]) + "/" + std::to_string(counts[2]) + ")";
  return out;
}

Outcome identities() {
  Gen g(1003);
  int bad[4] = {0, 0, 0, 0};
  double worst = 0;
  auto agree = [&](const ExtScalar& x, const ExtScalar& y, int which) {
    if (x.kind() != y.kind()) {
      ++bad[which];
      return;
    }
    if (!x.is_real()) return;
    const double d = std::abs(x.value() - y.value());
    worst = std::max(worst, d);
    if (d > 1e-8) ++bad[which];
  };
  for (int i = 0; i < 1000; ++i) {
    const auto [a, k] = g.directed_polyhedron(2 + i % 3);
    const PhiProblem p(a, k);
    const Vector y = g.box(a.dim(), 5);
    const ExtScalar v = phi_eval(p, y);
    const double t = g.uni(-10, 10), lam = g.uni(0.1, 10), c = g.uni(-5, 5);
    const Vector y0 = g.box(a.dim(), 5);
    agree(phi_eval(p, Vector(y + t * k)), ext_add(v, t), 0);
    agree(phi_eval(PhiProblem(a, Vector(lam * k)), y), ext_scale(v, lam), 1);
    agree(phi_eval(PhiProblem(SetExpr::shift(Vector(c * k), a), k), y), ext_add(v, -c), 2);
    agree(phi_eval(PhiProblem(SetExpr::shift(y0, a), k), Vector(y + y0)), v, 3);
  }
  Outcome o;
  o.pass = bad[0] + bad[1] + bad[2] + bad[3] == 0;
  o.detail = "violations translation/scale/0-shift/A-shift=" + std::to_string(bad[0]) + "/" +
             std::to_string(bad[1]) + "/" + std::to_string(bad[2]) + "/" + std::to_string(bad[3]) +
             " max|diff|=" + fmt("%.2e", worst);
  return o;
}

Outcome sublevel_identity() {
  Gen g(1004);
  int discrepancies = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto [a, k] = g.directed_polyhedron(2 + i % 3);
    const auto& poly = std::get<PolyhedronNode>(a.node().v).poly;
    const Vector y = g.box(a.dim(), 5);
    const double t = g.uni(-8, 8);
    const oracle::Vec shifted = oracle::axpy(to_std(y), t, to_std(k));
    const bool member = oracle::in_poly(rows_of(poly.normals), to_std(poly.offsets), shifted, 1e-9);
    if (ext_le(phi_eval(PhiProblem(a, k), y), t) != member) ++discrepancies;
  }
  return {discrepancies == 0, "discrepancies=" + std::to_string(discrepancies) + " of 1000"};
}

// the 100 clouds shared by criteria 5 and 6
struct Instance {
  PointCloud f;
  SetExpr d;
  Vector k;
};
std::vector<Instance> characterization_instances(bool positive) {
  Gen g(positive ? 1007 : 1005);
  std::vector<Instance> out;
  for (int i = 0; i < 100; ++i) {
    const std::size_t dim = 2 + i % 3;
    const SetExpr d = i % 2 ? g.pointed_cone(dim) : nonneg(dim);
    Vector k = Vector::Ones(static_cast<Eigen::Index>(dim));
    k.array() += g.box(dim, 0.5).array();
    out.push_back({g.cloud(dim, g.pick(1, 200), positive), d, k});
  }
  return out;
}

Outcome characterization() {
  int eff_bad = 0, weff_bad = 0;
  for (const Instance& in : characterization_instances(false)) {
    if (characterize_eff(in.f, in.d, in.k).indices != eff(in.f, in.d).indices) ++eff_bad;
    if (characterize_weff(in.f, in.d, in.k).indices != weff(in.f, in.d).indices) ++weff_bad;
  }
  return {eff_bad + weff_bad == 0,
          "mismatched clouds eff=" + std::to_string(eff_bad) + " weff=" + std::to_string(weff_bad) + " of 100"};
}

Vector corner(const PointCloud& f, bool upper) {
  Vector c = f[0];
  for (const Vector& y : f.points()) c = upper ? Vector(c.cwiseMax(y)) : Vector(c.cwiseMin(y));
  return c;
}

Outcome bound_scalarization() {
  int bad_sets = 0, bad_strict = 0;
  double worst = 0;
  for (const Instance& in : characterization_instances(false)) {
    const ScalarReport r = bound_scalarize(in.f, in.d, Vector(corner(in.f, true).array() + 1), Orientation::Below);
    if (positions(r.verdicts, "efficient", "weakly-efficient") != weff(in.f, in.d).indices) ++bad_sets;
    if (positions(r.verdicts, "efficient") != eff(in.f, in.d).indices) ++bad_strict;
    for (const PointVerdict& v : r.verdicts)
      if (v.verdict == "efficient" || v.verdict == "weakly-efficient") worst = std::max(worst, std::abs(*v.anchor + 1));
  }
  return {bad_sets == 0 && bad_strict == 0 && worst <= 1e-9,
          "weff mismatches=" + std::to_string(bad_sets) + " eff mismatches=" + std::to_string(bad_strict) +
              " max|anchor+1|=" + fmt("%.2e", worst)};
}

Outcome norm_scalarization() {
  int bad_sets = 0, bad_strict = 0;
  double worst = 0;
  for (const Instance& in : characterization_instances(true)) {
    const ScalarReport r = norm_characterize(in.f, in.d, Vector(corner(in.f, false).array() - 1));
    if (positions(r.verdicts, "efficient", "weakly-efficient") != weff(in.f, in.d).indices) ++bad_sets;
    if (positions(r.verdicts, "efficient") != eff(in.f, in.d).indices) ++bad_strict;
    for (const PointVerdict& v : r.verdicts)
      if (v.verdict == "efficient" || v.verdict == "weakly-efficient") worst = std::max(worst, std::abs(*v.anchor - 1));
  }

  Gen g(1017);
  double dev = 0;
  for (int rep = 0; rep < 4; ++rep) {
    const std::size_t dim = 2 + rep % 3;
    const Matrix gm = g.cone_rows(dim);
    const SetExpr c = SetExpr::halfspaces(-gm, Vector::Zero(gm.rows()));
    const OrderUnitSpec spec = OrderUnitSpec::make(c, Vector::Ones(static_cast<Eigen::Index>(dim)));
    const Vector a = g.box(dim, 3);
    std::vector<Vector> ys;
    while (ys.size() < 250) {
      const Vector u = g.box(dim, 5);
      if ((gm * u).minCoeff() >= 0) ys.push_back(a + u);
    }
    dev = std::max(dev, norm_phi_coincidence_check(spec, a, ys).max_diff);
  }
  return {bad_sets == 0 && bad_strict == 0 && worst <= 1e-9 && dev <= 1e-9,
          "weff mismatches=" + std::to_string(bad_sets) + " eff mismatches=" + std::to_string(bad_strict) +
              " max|anchor-1|=" + fmt("%.2e", worst) + " coincidence max dev=" + fmt("%.2e", dev) +
              " over 1000 samples"};
}

Outcome minkowski_relation() {
  Gen g(1008);
  double worst = 0;
  int classes = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t dim = 2 + i % 3;
    const Matrix gm = g.cone_rows(dim);  // C = {G u <= 0}, ones in -core C
    const SetExpr c = SetExpr::halfspaces(gm, Vector::Zero(gm.rows()));
    Vector k = Vector::Ones(static_cast<Eigen::Index>(dim));
    k.array() += g.box(dim, 0.5).array();
    const Vector y = g.box(dim, 5);
    const ExtScalar gauge = minkowski_eval(SetExpr::shift(k, c), y);
    const ExtScalar phi = phi_eval(PhiProblem(c, k), y);
    if (!gauge.is_real() || !phi.is_real()) {
      ++classes;
      continue;
    }
    worst = std::max(worst, std::abs(gauge.value() - std::max(phi.value(), 0.0)));
  }
  return {classes == 0 && worst <= 1e-8,
          "non-finite values=" + std::to_string(classes) + " max|diff|=" + fmt("%.2e", worst)};
}

Outcome efficiency_algebra() {
  Gen g(1009);
  int aug_bad = 0, slice_bad = 0, wslice_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t dim = 2 + i % 3;
    const Matrix gm = g.cone_rows(dim);
    const SetExpr d = SetExpr::halfspaces(-gm, Vector::Zero(gm.rows()));
    const PointCloud f = g.cloud(dim, g.pick(2, 60), false);
    const Idx base = eff(f, d).indices;

    std::vector<Vector> pts(f.points().begin(), f.points().end());
    for (int j = 0; j < 50; ++j) {
      Vector u = g.box(dim, 3);
      if ((gm * u).minCoeff() < 0 || u.lpNorm<Eigen::Infinity>() < 1e-3) continue;
      pts.push_back(f[g.pick(0, f.size() - 1)] + u);
    }
    Idx kept;
    for (std::size_t j : eff(PointCloud(pts), d).indices)
      if (j < f.size()) kept.push_back(j);
    // augmenting points never survive: each sits above its source in D \ {0}
    if (kept != base || eff(PointCloud(pts), d).indices.size() != base.size()) ++aug_bad;

    auto slice = [&](bool weak, int& counter) {
      const Idx whole = weak ? weff(f, d).indices : eff(f, d).indices;
      for (int s = 0; s < 5; ++s) {
        const Vector y = s == 0 ? Vector(corner(f, true)) : Vector(f[g.pick(0, f.size() - 1)] + g.box(dim, 1));
        Idx inside, expect;
        for (std::size_t j = 0; j < f.size(); ++j)
          if (contains(d, Vector(y - f[j]))) inside.push_back(j);
        if (inside.empty()) continue;
        const PointCloud sub = f.subset(inside);
        Idx got;
        for (std::size_t j : (weak ? weff(sub, d) : eff(sub, d)).indices) got.push_back(inside[j]);
        std::sort(got.begin(), got.end());
        for (std::size_t j : whole)
          if (std::binary_search(inside.begin(), inside.end(), j)) expect.push_back(j);
        if (got != expect) ++counter;
      }
    };
    slice(false, slice_bad);
    slice(true, wslice_bad);
  }
  return {aug_bad + slice_bad + wslice_bad == 0,
          "augmentation failures=" + std::to_string(aug_bad) + " Eff slice witnesses=" + std::to_string(slice_bad) +
              " WEff slice witnesses=" + std::to_string(wslice_bad) + " over 100 instances"};
}

Outcome monotonicity() {
  Gen g(1010);
  int violations = 0, strict_violations = 0, pairs = 0, strict_pairs = 0;
  while (pairs < 1000) {
    const auto [a, k] = g.directed_polyhedron(2 + pairs % 3);
    const Matrix& rows = std::get<PolyhedronNode>(a.node().v).poly.normals;
    const PhiProblem p(a, k);
    Vector u = g.box(a.dim(), 2);
    const double slack = (rows * u).maxCoeff();
    if (slack > 0) continue;  // u must lie in 0+A
    const Vector y2 = g.box(a.dim(), 5), y1 = y2 + u;
    const ExtScalar v1 = phi_eval(p, y1), v2 = phi_eval(p, y2);
    ++pairs;
    // y1 in y2 + 0+A, i.e. y1 <= y2 in the (-0+A) order: phi(y1) <= phi(y2)
    const bool ok = v2.is_nu() || v1.is_neg_inf() || (v1.is_real() && v2.is_real() && v1.value() <= v2.value() + 1e-12);
    if (!ok) ++violations;
    if (slack < -1e-3 && v2.is_real()) {
      ++strict_pairs;
      if (!(v1.is_neg_inf() || (v1.is_real() && v1.value() < v2.value()))) ++strict_violations;
    }
  }
  return {violations == 0 && strict_violations == 0,
          "violations=" + std::to_string(violations) + " of " + std::to_string(pairs) +
              " strict violations=" + std::to_string(strict_violations) + " of " + std::to_string(strict_pairs)};
}

Outcome separation() {
  Gen g(1011);
  int wrong = 0, overlapping = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t dim = 2 + i % 3;
    const Vector shift = g.box(dim, 3);
    const SetExpr a = SetExpr::shift(shift, nonpos(dim));
    Vector k = Vector::Ones(static_cast<Eigen::Index>(dim));
    k.array() += g.box(dim, 0.5).array();
    const bool overlap = i % 2 == 1;
    std::vector<Vector> pts;
    for (std::size_t j = 0; j < g.pick(1, 20); ++j) {
      Vector v = g.box(dim, 5);
      const std::size_t c = g.pick(0, dim - 1);
      v(static_cast<Eigen::Index>(c)) = shift(static_cast<Eigen::Index>(c)) + g.uni(0.01, 4);  // outside A
      pts.push_back(v);
    }
    if (overlap) {
      Vector inside = shift;
      for (auto& x : inside) x -= g.uni(0, 3);
      pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(g.pick(0, pts.size())), inside);
      ++overlapping;
    }
    const SeparationResult r = separate(a, k, PointCloud(pts));
    if ((r.verdict == "intersecting") != overlap) ++wrong;
    if (overlap && (!r.witness || !contains(a, pts[*r.witness]))) ++wrong;
  }
  return {wrong == 0, "wrong verdicts=" + std::to_string(wrong) + " of 50 (" + std::to_string(overlapping) +
                          " overlapping by construction)"};
}

Outcome min_eff_equivalence() {
  Gen g(1012);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t dim = 2 + i % 3;
    const Matrix gm = g.cone_rows(dim);
    SetExpr d = SetExpr::halfspaces(-gm, Vector::Zero(gm.rows()));
    if (i % 3 == 1) {  // a bounded slab of the cone, still antisymmetric
      Matrix rows(gm.rows() + 1, gm.cols());
      rows << -gm, Matrix::Ones(1, gm.cols());
      Vector b = Vector::Zero(rows.rows());
      b(b.size() - 1) = 4.0;
      d = SetExpr::halfspaces(rows, b);
    } else if (i % 3 == 2) {
      d = SetExpr::shift(Vector::Constant(static_cast<Eigen::Index>(dim), 0.5), d);
    }
    const PointCloud f = g.cloud(dim, g.pick(1, 80), false);
    if (min_points({d, false}, f) != min_via_eff(d, f)) ++bad;
  }
  return {bad == 0, "mismatched instances=" + std::to_string(bad) + " of 100"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example values and non-reversal", example_values},
      {"closed form vs bisection oracle", closed_form_vs_bisection},
      {"translation/scaling/shift identities", identities},
      {"sublevel identity", sublevel_identity},
      {"characterization equivalence", characterization},
      {"bound-anchored scalarization", bound_scalarization},
      {"order-unit norm scalarization", norm_scalarization},
      {"gauge of C+k", minkowski_relation},
      {"efficiency algebra", efficiency_algebra},
      {"monotonicity", monotonicity},
      {"separation", separation},
      {"Min/Eff equivalence", min_eff_equivalence},
  };
  int failures = 0, n = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), o.detail.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%d criteria passed in %.2f s\n", n - failures, n, secs);
  return failures == 0 ? 0 : 1;
}
