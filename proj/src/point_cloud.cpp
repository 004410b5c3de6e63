#include "uslev/point_cloud.hpp"

#include <cstdio>

namespace uslev {

PointCloud::PointCloud(std::vector<Vector> points,
                       std::optional<std::vector<std::string>> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  if (points_.empty()) throw InputError("point cloud: must contain at least one point");
  const auto n = points_.front().size();
  if (n < 1) throw InputError("point cloud: points must have dimension >= 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != n)
      throw InputError("point cloud: point " + std::to_string(i) + " has a different dimension");
    if (!points_[i].allFinite())
      throw InputError("point cloud: point " + std::to_string(i) + " is not finite");
  }
  if (labels_ && labels_->size() != points_.size())
    throw InputError("point cloud: label count does not match point count");
}

PointCloud PointCloud::from_rows(const Matrix& m) {
  std::vector<Vector> pts;
  pts.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) pts.emplace_back(m.row(i).transpose());
  return PointCloud(std::move(pts));
}

PointCloud PointCloud::subset(std::span<const std::size_t> indices) const {
  std::vector<Vector> pts;
  std::optional<std::vector<std::string>> labels;
  if (labels_) labels.emplace();
  for (std::size_t i : indices) {
    pts.push_back(points_.at(i));
    if (labels_) labels->push_back((*labels_)[i]);
  }
  return PointCloud(std::move(pts), std::move(labels));
}

bool same_point(const Vector& a, const Vector& b) {
  return (a - b).lpNorm<Eigen::Infinity>() <= 1e-12;
}

std::string format_point(const Vector& v) {
  std::string out = "(";
  char buf[32];
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", v[i]);
    if (i) out += ", ";
    out += buf;
  }
  return out + ")";
}

}  // namespace uslev
