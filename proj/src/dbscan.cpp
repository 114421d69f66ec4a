#include "fsg/dbscan.hpp"

#include <algorithm>

#include "fsg/error.hpp"
#include "fsg/kdtree.hpp"

namespace fsg {

std::vector<int> dbscan(const PointCloud& cloud, double eps, int min_pts) {
  if (eps <= 0) throw InvalidParameterError("dbscan: eps must be > 0");
  if (min_pts < 1) throw InvalidParameterError("dbscan: min_pts must be >= 1");

  const int n = static_cast<int>(cloud.size());
  std::vector<int> labels(n, -2);  // -2 unvisited, -1 noise
  if (n == 0) return labels;

  const KdTree3 tree(cloud);
  int next_cluster = 0;
  std::vector<int> frontier;

  for (int seed = 0; seed < n; ++seed) {
    if (labels[seed] != -2) continue;
    auto neighbors = tree.radius_search(cloud.points[seed], eps);
    if (static_cast<int>(neighbors.size()) < min_pts) {
      labels[seed] = -1;
      continue;
    }
    const int cluster = next_cluster++;
    labels[seed] = cluster;
    std::sort(neighbors.begin(), neighbors.end());
    frontier.assign(neighbors.begin(), neighbors.end());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int idx = frontier[i];
      if (labels[idx] == -1) labels[idx] = cluster;  // border point
      if (labels[idx] != -2) continue;
      labels[idx] = cluster;
      auto reach = tree.radius_search(cloud.points[idx], eps);
      if (static_cast<int>(reach.size()) >= min_pts) {
        std::sort(reach.begin(), reach.end());
        frontier.insert(frontier.end(), reach.begin(), reach.end());
      }
    }
  }
  return labels;
}

std::vector<std::size_t> largest_cluster(const std::vector<int>& labels) {
  int max_label = -1;
  for (int label : labels) max_label = std::max(max_label, label);
  if (max_label < 0) return {};
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_label) + 1, 0);
  for (int label : labels) {
    if (label >= 0) ++counts[static_cast<std::size_t>(label)];
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c) {
    if (counts[c] > counts[best]) best = c;
  }
  std::vector<std::size_t> indices;
  indices.reserve(counts[best]);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == static_cast<int>(best)) indices.push_back(i);
  }
  return indices;
}

PointCloud keep_largest_cluster(const PointCloud& cloud, double eps,
                                int min_pts) {
  const auto labels = dbscan(cloud, eps, min_pts);
  const auto indices = largest_cluster(labels);
  if (indices.empty()) return cloud;
  PointCloud out;
  out.points.reserve(indices.size());
  const bool colors = cloud.has_colors();
  const bool scan = cloud.has_scan_indices();
  for (std::size_t i : indices) {
    out.points.push_back(cloud.points[i]);
    if (colors) out.colors.push_back(cloud.colors[i]);
    if (scan) out.scan_indices.push_back(cloud.scan_indices[i]);
  }
  return out;
}

}  // namespace fsg
