#include "uiforge/image.h"

#include <jpeglib.h>
#include <png.h>

#include <csetjmp>
#include <cstring>

#include "uiforge/error.h"

namespace uiforge {
namespace {

[[noreturn]] void undecodable(const std::string& why) {
  throw Error(ErrorCode::kValidationFailed, "image does not decode: " + why);
}

RasterImage decode_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    undecodable(image.message);
  }
  RasterImage out;
  const bool gray = (image.format & PNG_FORMAT_FLAG_COLOR) == 0;
  const bool alpha = (image.format & PNG_FORMAT_FLAG_ALPHA) != 0;
  if (gray) {
    image.format = alpha ? PNG_FORMAT_GA : PNG_FORMAT_GRAY;
    out.channels = alpha ? 2 : 1;
  } else {
    image.format = alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;
    out.channels = alpha ? 4 : 3;
  }
  out.width = static_cast<int>(image.width);
  out.height = static_cast<int>(image.height);
  out.pixels.resize(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, out.pixels.data(), 0, nullptr)) {
    std::string why = image.message;
    png_image_free(&image);
    undecodable(why);
  }
  return out;
}

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* mgr = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, mgr->message);
  std::longjmp(mgr->jump, 1);
}

RasterImage decode_jpeg(std::span<const std::uint8_t> bytes) {
  jpeg_decompress_struct cinfo;
  JpegErrorManager err;
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = jpeg_error_exit;
  RasterImage out;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    undecodable(err.message);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_start_decompress(&cinfo);
  out.width = static_cast<int>(cinfo.output_width);
  out.height = static_cast<int>(cinfo.output_height);
  out.channels = cinfo.output_components;
  const std::size_t stride = static_cast<std::size_t>(out.width) * out.channels;
  out.pixels.resize(stride * out.height);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = out.pixels.data() + stride * cinfo.output_scanline;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return out;
}

}  // namespace

std::optional<std::string> sniff_image_mime(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t kPng[] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  if (bytes.size() >= sizeof kPng && std::memcmp(bytes.data(), kPng, sizeof kPng) == 0) {
    return "image/png";
  }
  if (bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF) {
    return "image/jpeg";
  }
  return std::nullopt;
}

RasterImage decode_image(std::span<const std::uint8_t> bytes) {
  auto mime = sniff_image_mime(bytes);
  if (!mime) undecodable("not a PNG or JPEG stream");
  return *mime == "image/png" ? decode_png(bytes) : decode_jpeg(bytes);
}

Bytes encode_png(const RasterImage& image) {
  png_image png;
  std::memset(&png, 0, sizeof png);
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width);
  png.height = static_cast<png_uint_32>(image.height);
  switch (image.channels) {
    case 1:
      png.format = PNG_FORMAT_GRAY;
      break;
    case 2:
      png.format = PNG_FORMAT_GA;
      break;
    case 3:
      png.format = PNG_FORMAT_RGB;
      break;
    case 4:
      png.format = PNG_FORMAT_RGBA;
      break;
    default:
      throw Error(ErrorCode::kInternal, "unsupported channel count");
  }
  png_alloc_size_t size = 0;
  if (!png_image_write_get_memory_size(png, size, 0, image.pixels.data(), 0, nullptr)) {
    throw Error(ErrorCode::kInternal, std::string("png encode failed: ") + png.message);
  }
  Bytes out(size);
  if (!png_image_write_to_memory(&png, out.data(), &size, 0, image.pixels.data(), 0, nullptr)) {
    throw Error(ErrorCode::kInternal, std::string("png encode failed: ") + png.message);
  }
  out.resize(size);
  return out;
}

RasterImage to_grayscale(const RasterImage& image) {
  if (image.channels <= 2) return image;
  RasterImage out;
  out.width = image.width;
  out.height = image.height;
  const bool alpha = image.channels == 4;
  out.channels = alpha ? 2 : 1;
  const std::size_t count = static_cast<std::size_t>(image.width) * image.height;
  out.pixels.reserve(count * out.channels);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint8_t* px = &image.pixels[i * image.channels];
    // Integer form of 0.299 R + 0.587 G + 0.114 B, rounded half up.
    unsigned luma = (299u * px[0] + 587u * px[1] + 114u * px[2] + 500u) / 1000u;
    out.pixels.push_back(static_cast<std::uint8_t>(luma));
    if (alpha) out.pixels.push_back(px[3]);
  }
  return out;
}

bool is_grayscale(const RasterImage& image) {
  if (image.channels <= 2) return true;
  const std::size_t count = static_cast<std::size_t>(image.width) * image.height;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint8_t* px = &image.pixels[i * image.channels];
    if (px[0] != px[1] || px[1] != px[2]) return false;
  }
  return true;
}

RasterImage solid_image(int width, int height, std::uint8_t r, std::uint8_t g,
                        std::uint8_t b) {
  RasterImage out;
  out.width = width;
  out.height = height;
  out.channels = 3;
  out.pixels.reserve(static_cast<std::size_t>(width) * height * 3);
  for (int i = 0; i < width * height; ++i) {
    out.pixels.push_back(r);
    out.pixels.push_back(g);
    out.pixels.push_back(b);
  }
  return out;
}

}  // namespace uiforge
