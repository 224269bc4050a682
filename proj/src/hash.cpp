#include "kgevo/hash.hpp"

#include <openssl/sha.h>

#include <cctype>

namespace kgevo {

std::array<std::uint8_t, 32> sha256(std::string_view data) {
  std::array<std::uint8_t, 32> digest{};
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest.data());
  return digest;
}

std::string base64url(const std::uint8_t* data, std::size_t len) {
  static constexpr char alphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
  std::string out;
  out.reserve((len + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= len; i += 3) {
    std::uint32_t v = data[i] << 16 | data[i + 1] << 8 | data[i + 2];
    out += alphabet[v >> 18];
    out += alphabet[(v >> 12) & 0x3F];
    out += alphabet[(v >> 6) & 0x3F];
    out += alphabet[v & 0x3F];
  }
  if (i + 1 == len) {
    std::uint32_t v = data[i] << 16;
    out += alphabet[v >> 18];
    out += alphabet[(v >> 12) & 0x3F];
  } else if (i + 2 == len) {
    std::uint32_t v = data[i] << 16 | data[i + 1] << 8;
    out += alphabet[v >> 18];
    out += alphabet[(v >> 12) & 0x3F];
    out += alphabet[(v >> 6) & 0x3F];
  }
  return out;
}

std::string trusty_code(std::string_view data) {
  auto digest = sha256(data);
  return "RA" + base64url(digest.data(), digest.size());
}

bool valid_trusty_code(std::string_view code) {
  if (code.size() != 45 || code[0] != 'R' || code[1] != 'A') return false;
  for (std::size_t i = 2; i < code.size(); ++i) {
    char c = code[i];
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')) return false;
  }
  return true;
}

}  // namespace kgevo
