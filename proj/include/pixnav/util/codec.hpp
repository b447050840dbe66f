#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pixnav {

// 8-bit RGB PNG encode/decode into memory buffers (libpng).
std::vector<std::uint8_t> encode_png_rgb(std::span<const std::uint8_t> rgb, int width, int height);

struct DecodedImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;
};
DecodedImage decode_png_rgb(std::span<const std::uint8_t> png);

void write_png_file(const std::string& path, std::span<const std::uint8_t> rgb, int width,
                    int height);

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

std::uint32_t crc32_of(std::span<const std::uint8_t> bytes);

}  // namespace pixnav
