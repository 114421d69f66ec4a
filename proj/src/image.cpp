#include "fsg/image.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "fsg/error.hpp"
#include "fsg/util.hpp"

namespace fsg {

RgbImage make_image(int width, int height, std::array<std::uint8_t, 3> fill) {
  RgbImage image;
  image.width = width;
  image.height = height;
  image.rgb.resize(static_cast<std::size_t>(width) * height * 3);
  for (std::size_t i = 0; i < image.rgb.size(); i += 3) {
    image.rgb[i] = fill[0];
    image.rgb[i + 1] = fill[1];
    image.rgb[i + 2] = fill[2];
  }
  return image;
}

void write_ppm(const std::filesystem::path& path, const RgbImage& image) {
  std::ostringstream header;
  header << "P6\n" << image.width << " " << image.height << "\n255\n";
  std::string bytes = header.str();
  bytes.append(reinterpret_cast<const char*>(image.rgb.data()),
               image.rgb.size());
  write_file(path, bytes);
}

RgbImage read_ppm(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  std::istringstream in(bytes);
  std::string magic;
  int width = 0, height = 0, maxval = 0;
  in >> magic >> width >> height >> maxval;
  if (magic != "P6" || width <= 0 || height <= 0 || maxval != 255) {
    throw ParseError("read_ppm: unsupported PPM: " + path.string());
  }
  in.get();  // single whitespace after maxval
  RgbImage image;
  image.width = width;
  image.height = height;
  const std::size_t payload = static_cast<std::size_t>(width) * height * 3;
  const std::size_t offset = static_cast<std::size_t>(in.tellg());
  if (bytes.size() < offset + payload) {
    throw ParseError("read_ppm: truncated PPM: " + path.string());
  }
  image.rgb.assign(bytes.begin() + static_cast<std::ptrdiff_t>(offset),
                   bytes.begin() + static_cast<std::ptrdiff_t>(offset + payload));
  return image;
}

namespace {

void append_u32_be(std::string& out, std::uint32_t value) {
  out.push_back(static_cast<char>((value >> 24) & 0xff));
  out.push_back(static_cast<char>((value >> 16) & 0xff));
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

void append_chunk(std::string& out, const char type[4],
                  const std::string& payload) {
  append_u32_be(out, static_cast<std::uint32_t>(payload.size()));
  std::string body(type, 4);
  body += payload;
  out += body;
  const auto crc = crc32(0L, reinterpret_cast<const Bytef*>(body.data()),
                         static_cast<uInt>(body.size()));
  append_u32_be(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

std::string encode_png(const RgbImage& image) {
  // Scanlines with filter byte 0.
  std::string raw;
  raw.reserve(static_cast<std::size_t>(image.height) *
              (static_cast<std::size_t>(image.width) * 3 + 1));
  for (int v = 0; v < image.height; ++v) {
    raw.push_back('\0');
    raw.append(reinterpret_cast<const char*>(
                   image.rgb.data() + static_cast<std::size_t>(v) * image.width * 3),
               static_cast<std::size_t>(image.width) * 3);
  }
  uLongf compressed_size = compressBound(static_cast<uLong>(raw.size()));
  std::string compressed(compressed_size, '\0');
  if (compress2(reinterpret_cast<Bytef*>(compressed.data()), &compressed_size,
                reinterpret_cast<const Bytef*>(raw.data()),
                static_cast<uLong>(raw.size()), 6) != Z_OK) {
    throw Error("encode_png: zlib compression failed");
  }
  compressed.resize(compressed_size);

  std::string ihdr;
  append_u32_be(ihdr, static_cast<std::uint32_t>(image.width));
  append_u32_be(ihdr, static_cast<std::uint32_t>(image.height));
  ihdr.push_back(8);   // bit depth
  ihdr.push_back(2);   // color type: truecolor
  ihdr.push_back(0);   // compression
  ihdr.push_back(0);   // filter
  ihdr.push_back(0);   // interlace

  std::string out("\x89PNG\r\n\x1a\n", 8);
  append_chunk(out, "IHDR", ihdr);
  append_chunk(out, "IDAT", compressed);
  append_chunk(out, "IEND", "");
  return out;
}

RgbImage crop(const RgbImage& image, const BBox2D& box) {
  const int x0 = std::clamp(static_cast<int>(std::floor(box.x_min)), 0,
                            image.width - 1);
  const int y0 = std::clamp(static_cast<int>(std::floor(box.y_min)), 0,
                            image.height - 1);
  const int x1 = std::clamp(static_cast<int>(std::ceil(box.x_max)), x0,
                            image.width - 1);
  const int y1 = std::clamp(static_cast<int>(std::ceil(box.y_max)), y0,
                            image.height - 1);
  RgbImage out = make_image(x1 - x0 + 1, y1 - y0 + 1);
  for (int v = y0; v <= y1; ++v) {
    std::memcpy(out.rgb.data() + static_cast<std::size_t>(v - y0) * out.width * 3,
                image.rgb.data() +
                    (static_cast<std::size_t>(v) * image.width + x0) * 3,
                static_cast<std::size_t>(out.width) * 3);
  }
  return out;
}

void draw_box(RgbImage& image, const BBox2D& box,
              std::array<std::uint8_t, 3> color) {
  const int x0 = std::clamp(static_cast<int>(std::lround(box.x_min)), 0,
                            image.width - 1);
  const int y0 = std::clamp(static_cast<int>(std::lround(box.y_min)), 0,
                            image.height - 1);
  const int x1 = std::clamp(static_cast<int>(std::lround(box.x_max)), 0,
                            image.width - 1);
  const int y1 = std::clamp(static_cast<int>(std::lround(box.y_max)), 0,
                            image.height - 1);
  for (int t = 0; t < 3; ++t) {
    for (int u = x0; u <= x1; ++u) {
      if (y0 + t < image.height) image.set(u, y0 + t, color);
      if (y1 - t >= 0) image.set(u, y1 - t, color);
    }
    for (int v = y0; v <= y1; ++v) {
      if (x0 + t < image.width) image.set(x0 + t, v, color);
      if (x1 - t >= 0) image.set(x1 - t, v, color);
    }
  }
}

void write_depth(const std::filesystem::path& path, const DepthImage& depth) {
  std::string bytes;
  bytes.reserve(depth.mm.size() * 2);
  for (std::uint16_t value : depth.mm) {
    bytes.push_back(static_cast<char>(value & 0xff));
    bytes.push_back(static_cast<char>((value >> 8) & 0xff));
  }
  write_file(path, bytes);
}

DepthImage read_depth(const std::filesystem::path& path, int width,
                      int height) {
  const std::string bytes = read_file(path);
  const std::size_t expected = static_cast<std::size_t>(width) * height * 2;
  if (bytes.size() != expected) {
    throw ParseError("read_depth: size mismatch for " + path.string());
  }
  DepthImage depth;
  depth.width = width;
  depth.height = height;
  depth.mm.resize(static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < depth.mm.size(); ++i) {
    depth.mm[i] = static_cast<std::uint16_t>(
        static_cast<std::uint8_t>(bytes[2 * i]) |
        (static_cast<std::uint16_t>(static_cast<std::uint8_t>(bytes[2 * i + 1]))
         << 8));
  }
  return depth;
}

}  // namespace fsg
