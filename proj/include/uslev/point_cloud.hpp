#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uslev/sets.hpp"

namespace uslev {

/// Finite outcome set F: a nonempty indexed list of points of one dimension.
/// Duplicates are allowed.
class PointCloud {
 public:
  explicit PointCloud(std::vector<Vector> points,
                      std::optional<std::vector<std::string>> labels = std::nullopt);
  /// Rows of `m` as points.
  static PointCloud from_rows(const Matrix& m);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(points_.front().size()); }
  const Vector& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Vector> points() const { return points_; }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }

  /// Subcloud with the selected indices, in the given order.
  PointCloud subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<Vector> points_;
  std::optional<std::vector<std::string>> labels_;
};

/// Point equality used for the "y != y0" tests: ||a - b||_inf <= 1e-12.
bool same_point(const Vector& a, const Vector& b);

/// "(x1, x2, ...)" with 12 significant digits, for witnesses and messages.
std::string format_point(const Vector& v);

}  // namespace uslev
