#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace kgevo {

std::array<std::uint8_t, 32> sha256(std::string_view data);

/// Unpadded base64url encoding.
std::string base64url(const std::uint8_t* data, std::size_t len);

/// 45-character verifiable artifact code: "RA" + base64url(SHA-256(data)).
std::string trusty_code(std::string_view data);

/// True iff `code` matches RA[A-Za-z0-9_-]{43}.
bool valid_trusty_code(std::string_view code);

}  // namespace kgevo
