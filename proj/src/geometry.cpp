#include "fsg/geometry.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "fsg/error.hpp"

namespace fsg {

namespace {

ProjectedPoint project_camera_point(const Intrinsics& intr, const Vec3& cam) {
  ProjectedPoint out;
  out.z = cam.z();
  out.in_frustum = cam.z() > 0.0;
  if (!out.in_frustum) return out;
  out.u = intr.fx * cam.x() / cam.z() + intr.cx;
  out.v = intr.fy * cam.y() / cam.z() + intr.cy;
  out.in_image = out.u >= 0.0 && out.u < intr.width && out.v >= 0.0 &&
                 out.v < intr.height;
  return out;
}

}  // namespace

std::vector<ProjectedPoint> project_points(const Intrinsics& intrinsics,
                                           const Pose& pose,
                                           const PointCloud& points) {
  if (!pose.is_valid()) {
    throw InvalidPoseError("project_points: rotation is not orthonormal");
  }
  std::vector<ProjectedPoint> out;
  out.reserve(points.size());
  const Mat3 world_to_cam = pose.rotation.transpose();
  for (const Vec3& p : points.points) {
    out.push_back(
        project_camera_point(intrinsics, world_to_cam * (p - pose.translation)));
  }
  return out;
}

ProjectedPoint project_point(const Intrinsics& intrinsics, const Pose& pose,
                             const Vec3& world) {
  if (!pose.is_valid()) {
    throw InvalidPoseError("project_point: rotation is not orthonormal");
  }
  return project_camera_point(intrinsics, pose.to_camera(world));
}

PointCloud back_project(const Frame& frame,
                        std::span<const std::uint32_t> mask_pixels) {
  PointCloud cloud;
  const Intrinsics& intr = frame.intrinsics;
  cloud.points.reserve(mask_pixels.size());
  for (std::uint32_t flat : mask_pixels) {
    const int u = static_cast<int>(flat % static_cast<std::uint32_t>(intr.width));
    const int v = static_cast<int>(flat / static_cast<std::uint32_t>(intr.width));
    if (!frame.depth.in_bounds(u, v)) {
      throw InvalidParameterError("back_project: mask pixel outside image");
    }
    const std::uint16_t depth_mm = frame.depth.at(u, v);
    if (depth_mm == 0) continue;
    const double z = depth_mm / 1000.0;
    const Vec3 cam((u - intr.cx) * z / intr.fx, (v - intr.cy) * z / intr.fy, z);
    cloud.points.push_back(frame.pose.to_world(cam));
  }
  return cloud;
}

double nn_overlap(const PointCloud& u, const KdTree3& v_tree, double dist) {
  if (dist <= 0) throw InvalidParameterError("nn_overlap: dist must be > 0");
  if (u.empty()) return 0.0;
  if (v_tree.empty()) return 0.0;
  std::size_t hits = 0;
  for (const Vec3& p : u.points) {
    if (v_tree.has_neighbor_within(p, dist)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(u.size());
}

double nn_overlap(const PointCloud& u, const PointCloud& v, double dist) {
  if (dist <= 0) throw InvalidParameterError("nn_overlap: dist must be > 0");
  if (u.empty() || v.empty()) return 0.0;
  return nn_overlap(u, KdTree3(v), dist);
}

double geometric_similarity(const PointCloud& u, const KdTree3& u_tree,
                            const PointCloud& v, const KdTree3& v_tree,
                            double dist) {
  return std::max(nn_overlap(u, v_tree, dist), nn_overlap(v, u_tree, dist));
}

double geometric_similarity(const PointCloud& u, const PointCloud& v,
                            double dist) {
  if (dist <= 0) {
    throw InvalidParameterError("geometric_similarity: dist must be > 0");
  }
  if (u.empty() || v.empty()) return 0.0;
  return geometric_similarity(u, KdTree3(u), v, KdTree3(v), dist);
}

PointCloud voxel_downsample(const PointCloud& cloud, double voxel) {
  if (voxel <= 0) {
    throw InvalidParameterError("voxel_downsample: voxel must be > 0");
  }
  struct Accumulator {
    Vec3 sum = Vec3::Zero();
    double r = 0, g = 0, b = 0;
    std::size_t count = 0;
  };
  auto key_of = [voxel](const Vec3& p) {
    const auto qx = static_cast<std::int64_t>(std::floor(p.x() / voxel));
    const auto qy = static_cast<std::int64_t>(std::floor(p.y() / voxel));
    const auto qz = static_cast<std::int64_t>(std::floor(p.z() / voxel));
    // 21 bits per axis packed; fine for |coord / voxel| < 2^20.
    return (static_cast<std::uint64_t>(qx & 0x1fffff) << 42) |
           (static_cast<std::uint64_t>(qy & 0x1fffff) << 21) |
           static_cast<std::uint64_t>(qz & 0x1fffff);
  };

  std::unordered_map<std::uint64_t, std::size_t> slots;
  std::vector<Accumulator> cells;  // first-occupancy order
  slots.reserve(cloud.size());
  const bool with_colors = cloud.has_colors();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const std::uint64_t key = key_of(cloud.points[i]);
    auto [it, inserted] = slots.emplace(key, cells.size());
    if (inserted) cells.emplace_back();
    Accumulator& acc = cells[it->second];
    acc.sum += cloud.points[i];
    if (with_colors) {
      acc.r += cloud.colors[i][0];
      acc.g += cloud.colors[i][1];
      acc.b += cloud.colors[i][2];
    }
    ++acc.count;
  }

  PointCloud out;
  out.points.reserve(cells.size());
  if (with_colors) out.colors.reserve(cells.size());
  for (const Accumulator& acc : cells) {
    const double n = static_cast<double>(acc.count);
    out.points.push_back(acc.sum / n);
    if (with_colors) {
      out.colors.push_back({static_cast<std::uint8_t>(acc.r / n + 0.5),
                            static_cast<std::uint8_t>(acc.g / n + 0.5),
                            static_cast<std::uint8_t>(acc.b / n + 0.5)});
    }
  }
  return out;
}

double point_iou(std::span<const std::int64_t> a,
                 std::span<const std::int64_t> b) {
  std::unordered_set<std::int64_t> set_a(a.begin(), a.end());
  std::unordered_set<std::int64_t> set_b(b.begin(), b.end());
  std::size_t inter = 0;
  for (std::int64_t idx : set_a) {
    if (set_b.count(idx)) ++inter;
  }
  const std::size_t uni = set_a.size() + set_b.size() - inter;
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace fsg
