#include "fsg/filters.hpp"

#include <cmath>

#include "fsg/kdtree.hpp"

namespace fsg {

namespace {

PointCloud select(const PointCloud& cloud, const std::vector<char>& keep) {
  PointCloud out;
  const bool colors = cloud.has_colors();
  const bool scan = cloud.has_scan_indices();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (!keep[i]) continue;
    out.points.push_back(cloud.points[i]);
    if (colors) out.colors.push_back(cloud.colors[i]);
    if (scan) out.scan_indices.push_back(cloud.scan_indices[i]);
  }
  return out;
}

PointCloud radius_filter(const PointCloud& cloud, double radius,
                         int min_neighbors) {
  if (cloud.size() <= 1) return cloud;
  const KdTree3 tree(cloud);
  std::vector<char> keep(cloud.size(), 0);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    // radius_search includes the query point itself.
    const auto hits = tree.radius_search(cloud.points[i], radius);
    keep[i] = static_cast<int>(hits.size()) - 1 >= min_neighbors;
  }
  return select(cloud, keep);
}

PointCloud statistical_filter(const PointCloud& cloud, int k,
                              double std_mult) {
  const std::size_t n = cloud.size();
  if (n <= 2) return cloud;
  const int neighbors = std::min<int>(k, static_cast<int>(n) - 1);
  const KdTree3 tree(cloud);
  std::vector<double> mean_dist(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto knn = tree.nearest_k(cloud.points[i], neighbors + 1);
    double sum = 0.0;
    std::size_t used = 0;
    for (const auto& [idx, d2] : knn) {
      if (idx == static_cast<int>(i)) continue;
      sum += std::sqrt(d2);
      ++used;
    }
    mean_dist[i] = used > 0 ? sum / static_cast<double>(used) : 0.0;
  }
  double global_mean = 0.0;
  for (double d : mean_dist) global_mean += d;
  global_mean /= static_cast<double>(n);
  double variance = 0.0;
  for (double d : mean_dist) variance += (d - global_mean) * (d - global_mean);
  variance /= static_cast<double>(n);
  const double threshold = global_mean + std_mult * std::sqrt(variance);

  std::vector<char> keep(n, 0);
  for (std::size_t i = 0; i < n; ++i) keep[i] = mean_dist[i] <= threshold;
  return select(cloud, keep);
}

}  // namespace

PointCloud denoise_fe(const PointCloud& cloud, const DenoiseConfig& cfg) {
  if (cloud.empty()) return cloud;
  return statistical_filter(radius_filter(cloud, cfg.radius, cfg.min_neighbors),
                            cfg.stat_k, cfg.std_mult);
}

}  // namespace fsg
