#include <gtest/gtest.h>

#include <set>

#include "csv.h"
#include "test_support.h"
#include "uiforge/crypto.h"
#include "uiforge/error.h"
#include "uiforge/image.h"

namespace uiforge {
namespace {

TEST(Csv, QuotedCells) {
  auto rows = detail::parse_csv("a,b\n\"x,y\",\"he said \"\"hi\"\"\"\n\n\"multi\nline\",z\n");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].cells, (std::vector<std::string>{"x,y", "he said \"hi\""}));
  EXPECT_EQ(rows[2].cells[0], "multi\nline");
  EXPECT_EQ(rows[2].line, 4u);
  EXPECT_THROW(detail::parse_csv("\"open"), Error);
}

TEST(Csv, RowRoundTrip) {
  std::vector<std::string> cells = {"plain", "with,comma", "with \"quote\"", "line\nbreak", ""};
  auto rows = detail::parse_csv(detail::csv_row(cells) + "\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].cells, cells);
  EXPECT_EQ(detail::csv_escape("plain"), "plain");
}

TEST(Crypto, KnownDigests) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(base64_encode(std::string_view("foobar")), "Zm9vYmFy");
  EXPECT_EQ(base64_encode(std::string_view("fo")), "Zm8=");
  EXPECT_EQ(base64_encode(std::string_view("")), "");
}

TEST(Crypto, RandomIds) {
  std::set<std::string> seen;
  for (int i = 0; i < 100; ++i) seen.insert(random_hex(16));
  EXPECT_EQ(seen.size(), 100u);
  EXPECT_EQ(random_hex(5).size(), 10u);
  std::string u = uuid_v4();
  ASSERT_EQ(u.size(), 36u);
  EXPECT_EQ(u[14], '4');
  EXPECT_NE(std::string("89ab").find(u[19]), std::string::npos);
}

TEST(Image, PngRoundTripAndSniff) {
  RasterImage img = solid_image(5, 3, 10, 20, 30);
  Bytes png = encode_png(img);
  EXPECT_EQ(sniff_image_mime(png), "image/png");
  EXPECT_EQ(decode_image(png), img);
  Bytes jpeg = {0xFF, 0xD8, 0xFF, 0xE0};
  EXPECT_EQ(sniff_image_mime(jpeg), "image/jpeg");
  Bytes gif = {'G', 'I', 'F', '8'};
  EXPECT_FALSE(sniff_image_mime(gif));
  EXPECT_THROW(decode_image(gif), Error);
  Bytes truncated(png.begin(), png.begin() + 20);
  EXPECT_THROW(decode_image(truncated), Error);
}

TEST(Image, GrayscaleConversionUsesLuma) {
  RasterImage img = solid_image(2, 2, 255, 0, 0);
  EXPECT_FALSE(is_grayscale(img));
  RasterImage gray = to_grayscale(img);
  EXPECT_TRUE(is_grayscale(gray));
  // 0.299 * 255 = 76.2
  EXPECT_EQ(gray.at(0, 0, 0), 76);
  RasterImage w = to_grayscale(solid_image(1, 1, 255, 255, 255));
  EXPECT_EQ(w.at(0, 0, 0), 255);
}

TEST(Image, GrayPngDecodesAsGray) {
  Bytes png = testing::gray_png(3, 3, 77);
  RasterImage img = decode_image(png);
  EXPECT_TRUE(is_grayscale(img));
  EXPECT_EQ(img.at(1, 1, 0), 77);
}

}  // namespace
}  // namespace uiforge
