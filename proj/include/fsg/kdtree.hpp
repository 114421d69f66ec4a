#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fsg/types.hpp"

namespace fsg {

/// Exact 3D kd-tree (median split). All queries return exact results;
/// approximate neighbors are not acceptable for the merge metrics built
/// on top of this index.
class KdTree3 {
 public:
  KdTree3() = default;
  explicit KdTree3(std::span<const Vec3> points);
  explicit KdTree3(const PointCloud& cloud);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  /// Indices of all points with ||p - q|| <= radius.
  std::vector<int> radius_search(const Vec3& q, double radius) const;

  /// True iff any point lies within radius of q. Short-circuits.
  bool has_neighbor_within(const Vec3& q, double radius) const;

  /// Up to k nearest points, ordered by ascending distance.
  /// Returns (index, squared distance) pairs.
  std::vector<std::pair<int, double>> nearest_k(const Vec3& q, int k) const;

  /// Up to k nearest points within radius, ordered by ascending distance.
  std::vector<std::pair<int, double>> nearest_k_within(const Vec3& q, int k,
                                                       double radius) const;

 private:
  struct BuildRange {
    int lo, hi, depth;
  };

  void build(int lo, int hi, int depth);
  void radius_rec(int lo, int hi, int depth, const Vec3& q, double r2,
                  std::vector<int>& out) const;
  bool any_rec(int lo, int hi, int depth, const Vec3& q, double r2) const;
  void knn_rec(int lo, int hi, int depth, const Vec3& q, int k,
               std::vector<std::pair<double, int>>& heap, double& worst2) const;

  std::vector<Vec3> points_;   // copied; tree does not alias caller storage
  std::vector<int> order_;     // permutation; median at (lo+hi)/2 per range
};

}  // namespace fsg
