#include "fsg/types.hpp"

#include <algorithm>

namespace fsg {

bool is_affordance_label(const std::string& label) {
  return affordance_index(label) >= 0;
}

int affordance_index(const std::string& label) {
  const auto& labels = affordance_labels();
  const auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

BBox2D bbox_intersection(const BBox2D& a, const BBox2D& b) {
  BBox2D out;
  out.x_min = std::max(a.x_min, b.x_min);
  out.y_min = std::max(a.y_min, b.y_min);
  out.x_max = std::min(a.x_max, b.x_max);
  out.y_max = std::min(a.y_max, b.y_max);
  if (out.x_max < out.x_min) out.x_max = out.x_min;
  if (out.y_max < out.y_min) out.y_max = out.y_min;
  return out;
}

double bbox_intersection_area(const BBox2D& a, const BBox2D& b) {
  const double w = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  const double h = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  return (w > 0 && h > 0) ? w * h : 0.0;
}

double bbox_containment(const BBox2D& inner, const BBox2D& outer) {
  const double inner_area = inner.area();
  if (inner_area <= 0.0) return 0.0;
  return bbox_intersection_area(inner, outer) / inner_area;
}

bool aabb_intersects(const AABB3& a, const AABB3& b) {
  return (a.min.array() <= b.max.array()).all() &&
         (b.min.array() <= a.max.array()).all();
}

bool aabb_inside(const AABB3& a, const AABB3& b) {
  return (a.min.array() > b.min.array()).all() &&
         (a.max.array() < b.max.array()).all();
}

AABB3 aabb_union(const AABB3& a, const AABB3& b) {
  return {a.min.cwiseMin(b.min), a.max.cwiseMax(b.max)};
}

AABB3 compute_aabb(const PointCloud& cloud) {
  AABB3 box;
  if (cloud.empty()) return box;
  box.min = box.max = cloud.points[0];
  for (const Vec3& p : cloud.points) {
    box.min = box.min.cwiseMin(p);
    box.max = box.max.cwiseMax(p);
  }
  return box;
}

Vec3 compute_centroid(const PointCloud& cloud) {
  Vec3 sum = Vec3::Zero();
  if (cloud.empty()) return sum;
  for (const Vec3& p : cloud.points) sum += p;
  return sum / static_cast<double>(cloud.size());
}

}  // namespace fsg
