#include "fsg/scene_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstring>

#include "fsg/error.hpp"
#include "fsg/image.hpp"
#include "fsg/util.hpp"

namespace fsg {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

json pose_to_json(const Pose& pose) {
  json out = json::array();
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.block<3, 3>(0, 0) = pose.rotation;
  m.block<3, 1>(0, 3) = pose.translation;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out.push_back(m(r, c));
  }
  return out;
}

Pose pose_from_json(const json& arr) {
  if (!arr.is_array() || arr.size() != 16) {
    throw ParseError("frame pose must be a 16-element row-major array");
  }
  Pose pose;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) pose.rotation(r, c) = arr[r * 4 + c].get<double>();
    pose.translation[r] = arr[r * 4 + 3].get<double>();
  }
  return pose;
}

}  // namespace

Frame LabeledScene::load_frame(std::size_t index) const {
  const FrameRecord& rec = frames.at(index);
  Frame frame;
  frame.frame_id = rec.frame_id;
  frame.intrinsics = rec.intrinsics;
  frame.pose = rec.pose;
  frame.rgb_path = (root / rec.rgb_path).string();
  frame.depth = read_depth(root / rec.depth_path, rec.intrinsics.width,
                           rec.intrinsics.height);
  return frame;
}

void write_scan(const std::filesystem::path& path, const PointCloud& cloud) {
  std::string bytes;
  bytes.reserve(cloud.size() * 15);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    float xyz[3] = {static_cast<float>(cloud.points[i].x()),
                    static_cast<float>(cloud.points[i].y()),
                    static_cast<float>(cloud.points[i].z())};
    bytes.append(reinterpret_cast<const char*>(xyz), 12);
    std::array<std::uint8_t, 3> rgb = cloud.has_colors()
                                          ? cloud.colors[i]
                                          : std::array<std::uint8_t, 3>{0, 0, 0};
    bytes.append(reinterpret_cast<const char*>(rgb.data()), 3);
  }
  write_file(path, bytes);
}

PointCloud read_scan(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (bytes.size() % 15 != 0) {
    throw ParseError("scan file size not a multiple of 15: " + path.string());
  }
  const std::size_t n = bytes.size() / 15;
  PointCloud cloud;
  cloud.points.resize(n);
  cloud.colors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    float xyz[3];
    std::memcpy(xyz, bytes.data() + i * 15, 12);
    cloud.points[i] = Vec3(xyz[0], xyz[1], xyz[2]);
    std::memcpy(cloud.colors[i].data(), bytes.data() + i * 15 + 12, 3);
  }
  return cloud;
}

void write_annotations(const std::filesystem::path& path,
                       const std::vector<Annotation3D>& annotations) {
  ordered_json doc;
  doc["annotations"] = ordered_json::array();
  for (const auto& annot : annotations) {
    ordered_json entry;
    entry["annot_id"] = annot.annot_id;
    entry["affordance"] = annot.affordance;
    entry["indices"] = annot.scan_indices;
    doc["annotations"].push_back(std::move(entry));
  }
  write_file(path, doc.dump(2) + "\n");
}

std::vector<Annotation3D> read_annotations(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& ex) {
    throw ParseError("annotations parse error in " + path.string() + ": " +
                     ex.what());
  }
  std::vector<Annotation3D> out;
  for (const auto& entry : doc.at("annotations")) {
    Annotation3D annot;
    annot.annot_id = entry.at("annot_id").get<std::string>();
    annot.affordance = entry.at("affordance").get<std::string>();
    annot.scan_indices = entry.at("indices").get<std::vector<std::int64_t>>();
    if (annot.scan_indices.empty()) {
      throw ParseError("annotation " + annot.annot_id + " has no indices");
    }
    if (!is_affordance_label(annot.affordance)) {
      throw ParseError("annotation " + annot.annot_id +
                       " has unknown affordance: " + annot.affordance);
    }
    out.push_back(std::move(annot));
  }
  return out;
}

void write_scene_manifest(const LabeledScene& scene) {
  ordered_json doc;
  doc["scene_id"] = scene.scene_id;
  doc["scan"] = "scan.bin";
  doc["annotations"] = "annotations.json";
  doc["frames"] = ordered_json::array();
  for (const auto& frame : scene.frames) {
    ordered_json entry;
    entry["frame_id"] = frame.frame_id;
    entry["rgb"] = frame.rgb_path;
    entry["depth"] = frame.depth_path;
    entry["width"] = frame.intrinsics.width;
    entry["height"] = frame.intrinsics.height;
    entry["fx"] = frame.intrinsics.fx;
    entry["fy"] = frame.intrinsics.fy;
    entry["cx"] = frame.intrinsics.cx;
    entry["cy"] = frame.intrinsics.cy;
    entry["pose"] = pose_to_json(frame.pose);
    doc["frames"].push_back(std::move(entry));
  }
  write_file(scene.root / "scene.json", doc.dump(2) + "\n");
}

LabeledScene read_scene(const std::filesystem::path& scene_dir) {
  json doc;
  const auto manifest = scene_dir / "scene.json";
  try {
    doc = json::parse(read_file(manifest));
  } catch (const json::exception& ex) {
    throw ParseError("scene manifest parse error in " + manifest.string() +
                     ": " + ex.what());
  }
  LabeledScene scene;
  scene.root = scene_dir;
  scene.scene_id = doc.at("scene_id").get<std::string>();
  scene.scan = read_scan(scene_dir / doc.at("scan").get<std::string>());
  scene.annotations =
      read_annotations(scene_dir / doc.at("annotations").get<std::string>());
  const auto scan_size = static_cast<std::int64_t>(scene.scan.size());
  for (const auto& annot : scene.annotations) {
    for (std::int64_t idx : annot.scan_indices) {
      if (idx < 0 || idx >= scan_size) {
        throw ParseError("annotation " + annot.annot_id +
                         " references point outside scan");
      }
    }
  }
  for (const auto& entry : doc.at("frames")) {
    FrameRecord rec;
    rec.frame_id = entry.at("frame_id").get<std::string>();
    rec.rgb_path = entry.at("rgb").get<std::string>();
    rec.depth_path = entry.at("depth").get<std::string>();
    rec.intrinsics.width = entry.at("width").get<int>();
    rec.intrinsics.height = entry.at("height").get<int>();
    rec.intrinsics.fx = entry.at("fx").get<double>();
    rec.intrinsics.fy = entry.at("fy").get<double>();
    rec.intrinsics.cx = entry.at("cx").get<double>();
    rec.intrinsics.cy = entry.at("cy").get<double>();
    rec.intrinsics.validate();
    rec.pose = pose_from_json(entry.at("pose"));
    if (!rec.pose.is_valid(1e-6)) {
      throw ParseError("frame " + rec.frame_id + " pose is not orthonormal");
    }
    scene.frames.push_back(std::move(rec));
  }
  return scene;
}

std::vector<LabeledScene> read_scenes(const std::filesystem::path& root) {
  std::vector<std::filesystem::path> dirs;
  if (std::filesystem::exists(root / "scene.json")) {
    dirs.push_back(root);
  } else {
    for (const auto& entry : std::filesystem::directory_iterator(root)) {
      if (entry.is_directory() &&
          std::filesystem::exists(entry.path() / "scene.json")) {
        dirs.push_back(entry.path());
      }
    }
  }
  std::vector<LabeledScene> scenes;
  scenes.reserve(dirs.size());
  for (const auto& dir : dirs) scenes.push_back(read_scene(dir));
  std::sort(scenes.begin(), scenes.end(),
            [](const LabeledScene& a, const LabeledScene& b) {
              return a.scene_id < b.scene_id;
            });
  return scenes;
}

}  // namespace fsg
