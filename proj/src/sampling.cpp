#include "uslev/sampling.hpp"

#include <algorithm>

namespace uslev {

namespace {

constexpr int kRejectionTries = 200;

Vector uniform_box(Rng& rng, std::size_t dim, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  Vector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = u(rng);
  return v;
}

/// Min-norm correction of x onto {y : A_S y = b_S} for the selected rows.
std::optional<Vector> project_onto_rows(const HalfspacePolyhedron& p, const Vector& x,
                                        const std::vector<Eigen::Index>& rows) {
  Matrix a(static_cast<Eigen::Index>(rows.size()), x.size());
  Vector r(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    a.row(static_cast<Eigen::Index>(j)) = p.normals.row(rows[j]);
    r[static_cast<Eigen::Index>(j)] = p.normals.row(rows[j]).dot(x) - p.offsets[rows[j]];
  }
  const Matrix gram = a * a.transpose();
  Eigen::FullPivLU<Matrix> lu(gram);
  if (!lu.isInvertible()) return std::nullopt;
  return Vector(x - a.transpose() * lu.solve(r));
}

}  // namespace

PointSource box_source(std::size_t dim, double radius) {
  return [dim, radius](Rng& rng) { return uniform_box(rng, dim, radius); };
}

PointSource ray_source(Vector direction, double scale) {
  return [direction = std::move(direction), scale](Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, scale);
    return Vector(u(rng) * direction);
  };
}

SetSampler::SetSampler(SetExpr set, double radius)
    : set_(std::move(set)), radius_(radius), pieces_(flatten(set_)) {}

std::optional<Vector> SetSampler::draw_piece(const HalfspacePolyhedron& p, Rng& rng) const {
  for (int t = 0; t < kRejectionTries; ++t) {
    Vector v = uniform_box(rng, p.dim(), radius_);
    if (p.contains(v)) return v;
  }
  auto anchor = feasible_point(p, uniform_box(rng, p.dim(), radius_));
  if (!anchor) return std::nullopt;
  for (int t = 0; t < kRejectionTries; ++t) {
    Vector v = *anchor + uniform_box(rng, p.dim(), radius_);
    if (p.contains(v)) return v;
  }
  return anchor;
}

std::optional<Vector> SetSampler::draw(Rng& rng) const {
  if (pieces_) {
    std::uniform_int_distribution<std::size_t> pick(0, pieces_->size() - 1);
    for (std::size_t attempt = 0; attempt < pieces_->size() * 2 + 1; ++attempt) {
      if (auto v = draw_piece((*pieces_)[pick(rng)], rng)) return v;
    }
    return std::nullopt;
  }
  for (int t = 0; t < kRejectionTries * 5; ++t) {
    Vector v = uniform_box(rng, set_.dim(), radius_);
    if (contains(set_, v)) return v;
  }
  return std::nullopt;
}

std::vector<Vector> SetSampler::draw_n(Rng& rng, std::size_t n) const {
  std::vector<Vector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = draw(rng);
    if (!v) break;
    out.push_back(std::move(*v));
  }
  return out;
}

std::vector<Vector> SetSampler::probes(Rng& rng, std::size_t n) const {
  std::vector<Vector> out;
  if (n == 0) return out;
  const Vector zero = Vector::Zero(static_cast<Eigen::Index>(set_.dim()));
  if (contains(set_, zero)) out.push_back(zero);
  if (!pieces_) {
    auto rest = draw_n(rng, n - out.size());
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  std::uniform_int_distribution<std::size_t> pick_piece(0, pieces_->size() - 1);
  std::size_t guard = 0;
  while (out.size() < n && guard++ < n * 20) {
    const HalfspacePolyhedron& p = (*pieces_)[pick_piece(rng)];
    auto base = draw_piece(p, rng);
    if (!base) continue;
    std::uniform_int_distribution<Eigen::Index> pick_row(0, p.normals.rows() - 1);
    const int mode = static_cast<int>(out.size() % 3);
    std::optional<Vector> v = base;
    if (mode == 1) {
      v = project_onto_rows(p, *base, {pick_row(rng)});
    } else if (mode == 2 && p.normals.rows() >= 2) {
      const Eigen::Index r1 = pick_row(rng);
      Eigen::Index r2 = pick_row(rng);
      if (r2 == r1) r2 = (r1 + 1) % p.normals.rows();
      v = project_onto_rows(p, *base, {r1, r2});
    }
    if (v && p.contains(*v)) out.push_back(std::move(*v));
  }
  return out;
}

PointSource SetSampler::as_source() const {
  return [self = *this](Rng& rng) {
    if (auto v = self.draw(rng)) return *v;
    return Vector(Vector::Zero(static_cast<Eigen::Index>(self.set().dim())));
  };
}

}  // namespace uslev
