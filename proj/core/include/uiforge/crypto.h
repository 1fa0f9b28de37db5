#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace uiforge {

// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

std::string base64_encode(std::span<const std::uint8_t> data);
std::string base64_encode(std::string_view data);

// Hex string of `bytes` bytes from the OS CSPRNG.
std::string random_hex(std::size_t bytes);

// RFC 4122 version-4 UUID.
std::string uuid_v4();

}  // namespace uiforge
