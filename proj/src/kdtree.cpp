#include "fsg/kdtree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fsg {

KdTree3::KdTree3(std::span<const Vec3> points)
    : points_(points.begin(), points.end()) {
  order_.resize(points_.size());
  std::iota(order_.begin(), order_.end(), 0);
  if (!points_.empty()) build(0, static_cast<int>(points_.size()), 0);
}

KdTree3::KdTree3(const PointCloud& cloud)
    : KdTree3(std::span<const Vec3>(cloud.points)) {}

void KdTree3::build(int lo, int hi, int depth) {
  if (hi - lo <= 1) return;
  const int axis = depth % 3;
  const int mid = (lo + hi) / 2;
  std::nth_element(order_.begin() + lo, order_.begin() + mid,
                   order_.begin() + hi, [&](int a, int b) {
                     return points_[a][axis] < points_[b][axis];
                   });
  build(lo, mid, depth + 1);
  build(mid + 1, hi, depth + 1);
}

std::vector<int> KdTree3::radius_search(const Vec3& q, double radius) const {
  std::vector<int> out;
  if (!points_.empty() && radius >= 0) {
    radius_rec(0, static_cast<int>(points_.size()), 0, q, radius * radius, out);
  }
  return out;
}

void KdTree3::radius_rec(int lo, int hi, int depth, const Vec3& q, double r2,
                         std::vector<int>& out) const {
  if (lo >= hi) return;
  const int mid = (lo + hi) / 2;
  const int idx = order_[mid];
  const Vec3& p = points_[idx];
  if ((p - q).squaredNorm() <= r2) out.push_back(idx);
  const int axis = depth % 3;
  const double delta = q[axis] - p[axis];
  // Descend the near side first, the far side only if the splitting plane
  // is within range.
  if (delta <= 0) {
    radius_rec(lo, mid, depth + 1, q, r2, out);
    if (delta * delta <= r2) radius_rec(mid + 1, hi, depth + 1, q, r2, out);
  } else {
    radius_rec(mid + 1, hi, depth + 1, q, r2, out);
    if (delta * delta <= r2) radius_rec(lo, mid, depth + 1, q, r2, out);
  }
}

bool KdTree3::has_neighbor_within(const Vec3& q, double radius) const {
  if (points_.empty() || radius < 0) return false;
  return any_rec(0, static_cast<int>(points_.size()), 0, q, radius * radius);
}

bool KdTree3::any_rec(int lo, int hi, int depth, const Vec3& q,
                      double r2) const {
  if (lo >= hi) return false;
  const int mid = (lo + hi) / 2;
  const Vec3& p = points_[order_[mid]];
  if ((p - q).squaredNorm() <= r2) return true;
  const int axis = depth % 3;
  const double delta = q[axis] - p[axis];
  if (delta <= 0) {
    if (any_rec(lo, mid, depth + 1, q, r2)) return true;
    return delta * delta <= r2 && any_rec(mid + 1, hi, depth + 1, q, r2);
  }
  if (any_rec(mid + 1, hi, depth + 1, q, r2)) return true;
  return delta * delta <= r2 && any_rec(lo, mid, depth + 1, q, r2);
}

std::vector<std::pair<int, double>> KdTree3::nearest_k(const Vec3& q,
                                                       int k) const {
  std::vector<std::pair<int, double>> result;
  if (points_.empty() || k <= 0) return result;
  std::vector<std::pair<double, int>> heap;  // max-heap on squared distance
  heap.reserve(static_cast<std::size_t>(k) + 1);
  double worst2 = std::numeric_limits<double>::infinity();
  knn_rec(0, static_cast<int>(points_.size()), 0, q, k, heap, worst2);
  std::sort_heap(heap.begin(), heap.end());
  result.reserve(heap.size());
  for (const auto& [d2, idx] : heap) result.emplace_back(idx, d2);
  return result;
}

void KdTree3::knn_rec(int lo, int hi, int depth, const Vec3& q, int k,
                      std::vector<std::pair<double, int>>& heap,
                      double& worst2) const {
  if (lo >= hi) return;
  const int mid = (lo + hi) / 2;
  const int idx = order_[mid];
  const double d2 = (points_[idx] - q).squaredNorm();
  if (static_cast<int>(heap.size()) < k) {
    heap.emplace_back(d2, idx);
    std::push_heap(heap.begin(), heap.end());
    if (static_cast<int>(heap.size()) == k) worst2 = heap.front().first;
  } else if (d2 < worst2) {
    std::pop_heap(heap.begin(), heap.end());
    heap.back() = {d2, idx};
    std::push_heap(heap.begin(), heap.end());
    worst2 = heap.front().first;
  }
  const int axis = depth % 3;
  const double delta = q[axis] - points_[idx][axis];
  if (delta <= 0) {
    knn_rec(lo, mid, depth + 1, q, k, heap, worst2);
    if (delta * delta <= worst2) knn_rec(mid + 1, hi, depth + 1, q, k, heap, worst2);
  } else {
    knn_rec(mid + 1, hi, depth + 1, q, k, heap, worst2);
    if (delta * delta <= worst2) knn_rec(lo, mid, depth + 1, q, k, heap, worst2);
  }
}

std::vector<std::pair<int, double>> KdTree3::nearest_k_within(
    const Vec3& q, int k, double radius) const {
  auto all = nearest_k(q, k);
  const double r2 = radius * radius;
  std::erase_if(all, [r2](const auto& entry) { return entry.second > r2; });
  return all;
}

}  // namespace fsg
