#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace uiforge {

// 8-bit interleaved raster. channels: 1 gray, 2 gray+alpha, 3 RGB, 4 RGBA.
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int x, int y, int c) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

using Bytes = std::vector<std::uint8_t>;

// "image/png" or "image/jpeg" from magic bytes; nullopt otherwise.
std::optional<std::string> sniff_image_mime(std::span<const std::uint8_t> bytes);

// Decodes PNG or JPEG. Throws Error(kValidationFailed) for anything else or a
// corrupt stream.
RasterImage decode_image(std::span<const std::uint8_t> bytes);

Bytes encode_png(const RasterImage& image);

// Rec. 601 luma, rounded to nearest. Alpha is kept.
RasterImage to_grayscale(const RasterImage& image);

// True when every pixel has equal color channels.
bool is_grayscale(const RasterImage& image);

// Solid-color RGB image, used for placeholder thumbnails and tests.
RasterImage solid_image(int width, int height, std::uint8_t r, std::uint8_t g,
                        std::uint8_t b);

}  // namespace uiforge
