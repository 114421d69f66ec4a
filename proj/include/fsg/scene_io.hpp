#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fsg/types.hpp"

namespace fsg {

/// 3D annotation over a scan: an index set plus its affordance.
struct Annotation3D {
  std::string annot_id;
  std::string affordance;
  std::vector<std::int64_t> scan_indices;
};

/// Frame metadata as stored in the scene manifest; depth loads on demand.
struct FrameRecord {
  std::string frame_id;
  std::string rgb_path;    // relative to the scene directory
  std::string depth_path;  // relative to the scene directory
  Intrinsics intrinsics;
  Pose pose;
};

/// A scanned scene: high-resolution point scan, 3D functional-element
/// annotations, and the posed RGB-D frames captured in it.
struct LabeledScene {
  std::string scene_id;
  std::filesystem::path root;
  PointCloud scan;
  std::vector<Annotation3D> annotations;
  std::vector<FrameRecord> frames;

  Frame load_frame(std::size_t index) const;
};

// Scan file: N x (3 little-endian float32 xyz [m] + 3 uint8 rgb).
void write_scan(const std::filesystem::path& path, const PointCloud& cloud);
PointCloud read_scan(const std::filesystem::path& path);

void write_annotations(const std::filesystem::path& path,
                       const std::vector<Annotation3D>& annotations);
std::vector<Annotation3D> read_annotations(const std::filesystem::path& path);

/// Writes <dir>/scene.json plus referenced files are expected alongside.
void write_scene_manifest(const LabeledScene& scene);
LabeledScene read_scene(const std::filesystem::path& scene_dir);

/// All scenes under a directory (any subdirectory holding scene.json),
/// ordered by scene_id.
std::vector<LabeledScene> read_scenes(const std::filesystem::path& root);

}  // namespace fsg
