#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fsg/scene_io.hpp"
#include "fsg/types.hpp"

namespace fsg {

struct ProjectionConfig {
  double theta_depth = 0.1;    // [m] occlusion tolerance
  double theta_area = 800.0;   // [px^2] minimum projected bbox area
  double theta_points = 0.6;   // minimum visible-point ratio
  double background_fraction = 0.01;
  double split_ratio = 0.8;    // train share of scenes

  void validate() const;
};

struct SliceConfig {
  int patch = 640;
  double overlap = 0.2;      // fraction of patch shared between neighbors
  double keep_ratio = 0.6;   // minimum clipped-area / original-area
};

struct DatasetAnnotation {
  BBox2D bbox;  // absolute pixels within the image entry
  std::string affordance;
  std::string annot_id;
};

struct DatasetImage {
  std::string image_id;
  std::string scene_id;
  std::string frame_id;
  std::string source_rgb;  // path as recorded in the scene manifest
  int width = 0, height = 0;
  int offset_x = 0, offset_y = 0;  // nonzero for sliced patches
  bool padded = false;             // patch extends beyond the source image
  bool background = false;
  std::string split;  // "train" | "val"
  std::vector<DatasetAnnotation> annotations;
};

struct Dataset2D {
  std::vector<DatasetImage> images;
  std::vector<std::string> warnings;
  bool sliced = false;

  std::size_t annotation_count() const;
};

/// Projects one 3D annotation into a frame. Returns the tight bbox of the
/// visible points and the affordance, or nothing when the annotation is
/// occluded, out of view, too small, or insufficiently visible.
std::optional<std::pair<BBox2D, std::string>> project_annotation(
    const Frame& frame, const Annotation3D& annot, const PointCloud& scan,
    const ProjectionConfig& cfg);

/// Full projection pipeline over a corpus: all frames of all scenes,
/// deterministic seeded background injection, scene-disjoint split.
Dataset2D build_dataset(const std::vector<LabeledScene>& scenes,
                        const ProjectionConfig& cfg, std::uint64_t seed,
                        int workers = 1);

/// Sliding-window slicing with per-patch annotation retention by clipped
/// area ratio.
Dataset2D slice_dataset(const Dataset2D& dataset, const SliceConfig& cfg);

/// Patch x/y origins covering [0, extent) with the sliding-window rule:
/// fixed step, last window shifted flush to the edge.
std::vector<int> slice_starts(int extent, int patch, double overlap);

void write_dataset(const std::filesystem::path& path, const Dataset2D& dataset);
Dataset2D read_dataset(const std::filesystem::path& path);

/// One label file per image: "<class> <cx> <cy> <w> <h>" normalized lines.
void export_label_files(const std::filesystem::path& dir,
                        const Dataset2D& dataset);

}  // namespace fsg
