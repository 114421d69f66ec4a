#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fsg/error.hpp"

namespace fsg {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// The seven affordance labels, in canonical order. Class indices in label
/// exports refer to positions in this list.
inline const std::vector<std::string>& affordance_labels() {
  static const std::vector<std::string> labels = {
      "Rotate",     "Hook Pull",  "Hook Turn", "Key Press",
      "Tip Push",   "Pinch Pull", "Foot Push"};
  return labels;
}

bool is_affordance_label(const std::string& label);
int affordance_index(const std::string& label);  // -1 if unknown

/// Point cloud in meters, world frame. Colors and per-point source-scan
/// indices are optional and either empty or sized like points.
struct PointCloud {
  std::vector<Vec3> points;
  std::vector<std::array<std::uint8_t, 3>> colors;
  std::vector<std::int64_t> scan_indices;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool has_colors() const { return !colors.empty(); }
  bool has_scan_indices() const { return !scan_indices.empty(); }
};

/// Camera-to-world rigid transform.
struct Pose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  bool is_valid(double tol = 1e-9) const {
    const Mat3 gram = rotation.transpose() * rotation;
    return (gram - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
           std::abs(rotation.determinant() - 1.0) <= tol;
  }

  Vec3 to_camera(const Vec3& world) const {
    return rotation.transpose() * (world - translation);
  }
  Vec3 to_world(const Vec3& camera) const {
    return rotation * camera + translation;
  }
};

/// Pinhole intrinsics; pixel-center convention (pixel (i, j) is at
/// continuous coordinates (i, j)).
struct Intrinsics {
  double fx = 0, fy = 0, cx = 0, cy = 0;
  int width = 0, height = 0;

  void validate() const {
    if (fx <= 0 || fy <= 0) throw InvalidParameterError("intrinsics: fx, fy must be positive");
    if (!(cx > 0 && cx < width && cy > 0 && cy < height))
      throw InvalidParameterError("intrinsics: principal point outside image");
  }
};

/// Axis-aligned 2D box, pixel coordinates.
struct BBox2D {
  double x_min = 0, y_min = 0, x_max = 0, y_max = 0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  bool contains(double u, double v) const {
    return u >= x_min && u <= x_max && v >= y_min && v <= y_max;
  }
};

BBox2D bbox_intersection(const BBox2D& a, const BBox2D& b);
double bbox_intersection_area(const BBox2D& a, const BBox2D& b);
/// intersection-area(inner, outer) / area(inner); 0 if inner degenerate.
double bbox_containment(const BBox2D& inner, const BBox2D& outer);

/// Axis-aligned 3D box, meters.
struct AABB3 {
  Vec3 min = Vec3::Zero();
  Vec3 max = Vec3::Zero();

  Vec3 center() const { return 0.5 * (min + max); }
  Vec3 extents() const { return max - min; }
  bool contains(const Vec3& p) const {
    return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
  }
  AABB3 inflated(double margin) const {
    return {min - Vec3::Constant(margin), max + Vec3::Constant(margin)};
  }
};

bool aabb_intersects(const AABB3& a, const AABB3& b);
/// a strictly inside b (every face of a within b, not equal).
bool aabb_inside(const AABB3& a, const AABB3& b);
AABB3 aabb_union(const AABB3& a, const AABB3& b);
AABB3 compute_aabb(const PointCloud& cloud);
Vec3 compute_centroid(const PointCloud& cloud);

/// Depth map in millimeters; 0 marks invalid depth.
struct DepthImage {
  int width = 0, height = 0;
  std::vector<std::uint16_t> mm;

  std::uint16_t at(int u, int v) const {
    return mm[static_cast<std::size_t>(v) * width + u];
  }
  bool in_bounds(int u, int v) const {
    return u >= 0 && u < width && v >= 0 && v < height;
  }
};

/// One posed RGB-D observation. The RGB image stays on disk (path only);
/// depth is loaded because every pipeline stage reads it.
struct Frame {
  std::string frame_id;
  Intrinsics intrinsics;
  Pose pose;
  DepthImage depth;
  std::string rgb_path;
};

/// Flat pixel index (row-major) helpers for masks.
inline std::uint32_t pixel_index(int u, int v, int width) {
  return static_cast<std::uint32_t>(v) * static_cast<std::uint32_t>(width) +
         static_cast<std::uint32_t>(u);
}

}  // namespace fsg
