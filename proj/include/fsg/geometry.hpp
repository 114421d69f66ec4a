#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fsg/kdtree.hpp"
#include "fsg/types.hpp"

namespace fsg {

struct ProjectedPoint {
  double u = 0, v = 0, z = 0;
  bool in_frustum = false;  // z > 0
  bool in_image = false;    // (u, v) within [0, width) x [0, height)
};

/// Projects world points to pixel coordinates and camera depth.
/// Throws InvalidPoseError for non-orthonormal rotations.
std::vector<ProjectedPoint> project_points(const Intrinsics& intrinsics,
                                           const Pose& pose,
                                           const PointCloud& points);
ProjectedPoint project_point(const Intrinsics& intrinsics, const Pose& pose,
                             const Vec3& world);

/// Lifts masked pixels with valid depth into a world-frame cloud. Pixels
/// with depth 0 are skipped; an all-invalid mask yields an empty cloud.
PointCloud back_project(const Frame& frame,
                        std::span<const std::uint32_t> mask_pixels);

/// Fraction of u's points with a neighbor in v closer than dist.
/// Empty u yields 0 (conservative: empty segments never merge).
double nn_overlap(const PointCloud& u, const PointCloud& v, double dist);
double nn_overlap(const PointCloud& u, const KdTree3& v_tree, double dist);

/// max(overlap(u, v), overlap(v, u)); symmetric by construction.
double geometric_similarity(const PointCloud& u, const PointCloud& v,
                            double dist);
double geometric_similarity(const PointCloud& u, const KdTree3& u_tree,
                            const PointCloud& v, const KdTree3& v_tree,
                            double dist);

/// Grid anchored at the world origin; one centroid per occupied voxel,
/// emitted in first-occupancy order. Throws on voxel <= 0.
PointCloud voxel_downsample(const PointCloud& cloud, double voxel);

/// |a ∩ b| / |a ∪ b| over scan index sets; 0 if the union is empty.
double point_iou(std::span<const std::int64_t> a,
                 std::span<const std::int64_t> b);

}  // namespace fsg
