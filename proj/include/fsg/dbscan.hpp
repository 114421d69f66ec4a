#pragma once

#include <vector>

#include "fsg/types.hpp"

namespace fsg {

/// Density-based clustering. Labels are cluster ids starting at 0; noise
/// points get -1. A point is core when its eps-ball (including itself)
/// holds at least min_pts points. Deterministic for a fixed point order;
/// the partition is order-independent up to relabeling.
std::vector<int> dbscan(const PointCloud& cloud, double eps, int min_pts);

/// Index set of the most populous cluster (noise excluded). Ties go to the
/// lower cluster id. Empty when everything is noise.
std::vector<std::size_t> largest_cluster(const std::vector<int>& labels);

/// Keeps only the largest DBSCAN cluster; returns the input unchanged when
/// clustering finds no cluster at all (everything noise).
PointCloud keep_largest_cluster(const PointCloud& cloud, double eps,
                                int min_pts);

}  // namespace fsg
