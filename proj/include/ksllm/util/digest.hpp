#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ksllm::util {

// Lowercase hex SHA-256 of `data`; used as the content-address for cache
// entries.
std::string sha256_hex(std::string_view data);

// FNV-1a 64-bit. Pinned hash for the feature-hashing embedder so vectors and
// fixtures are portable across processes and platforms.
constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

constexpr std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = kFnvOffsetBasis;
  for (char c : data) {
    h ^= static_cast<std::uint8_t>(c);
    h *= kFnvPrime;
  }
  return h;
}

}  // namespace ksllm::util
