#pragma once

#include "fsg/types.hpp"

namespace fsg {

/// Outlier removal for small, sparse functional-element clouds: a radius
/// filter followed by a statistical distance filter.
struct DenoiseConfig {
  // Radius filter: keep a point iff it has >= min_neighbors others within radius.
  double radius = 0.02;
  int min_neighbors = 4;
  // Statistical filter: keep a point iff its mean distance to the k nearest
  // neighbors is <= global mean + std_mult * global stddev.
  int stat_k = 8;
  double std_mult = 2.0;
};

PointCloud denoise_fe(const PointCloud& cloud, const DenoiseConfig& cfg);

}  // namespace fsg
