#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace adapteval {

// FNV-1a, used for prompt hashes, artifact digests and the deterministic
// stubs. Stability across platforms and runs matters here, cryptographic
// strength does not.
constexpr std::uint64_t fnv1a64(std::string_view data,
                                std::uint64_t seed = 0xcbf29ce484222325ull) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

constexpr std::uint64_t fnv1a64_mix(std::uint64_t h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffu;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

/// 16-hex-digit digest of a string, e.g. for prompt hashes.
std::string digest_hex(std::string_view data);

}  // namespace adapteval
