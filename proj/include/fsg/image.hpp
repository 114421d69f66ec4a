#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fsg/types.hpp"

namespace fsg {

/// 8-bit RGB raster, row-major.
struct RgbImage {
  int width = 0, height = 0;
  std::vector<std::uint8_t> rgb;  // 3 bytes per pixel

  void set(int u, int v, std::array<std::uint8_t, 3> color) {
    const std::size_t base = (static_cast<std::size_t>(v) * width + u) * 3;
    rgb[base] = color[0];
    rgb[base + 1] = color[1];
    rgb[base + 2] = color[2];
  }
};

RgbImage make_image(int width, int height,
                    std::array<std::uint8_t, 3> fill = {0, 0, 0});

// Binary PPM (P6). The trivially readable on-disk format for frame RGB.
void write_ppm(const std::filesystem::path& path, const RgbImage& image);
RgbImage read_ppm(const std::filesystem::path& path);

/// PNG encoding (8-bit RGB, zlib-compressed, filter 0). Used for image
/// attachments on model requests; never decoded back.
std::string encode_png(const RgbImage& image);

RgbImage crop(const RgbImage& image, const BBox2D& box);

/// 3-px rectangle outline, clamped to the image.
void draw_box(RgbImage& image, const BBox2D& box,
              std::array<std::uint8_t, 3> color);

// Raw little-endian uint16 depth, row-major, millimeters.
void write_depth(const std::filesystem::path& path, const DepthImage& depth);
DepthImage read_depth(const std::filesystem::path& path, int width, int height);

}  // namespace fsg
