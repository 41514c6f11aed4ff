#pragma once

#include <cstdint>
#include <string>

namespace bpa {

// 64-bit FNV-1a with a fixed project seed; stable across platforms and runs.
inline constexpr std::uint64_t kHashSeed = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t fnv1a64(const std::string& data, std::uint64_t seed = kHashSeed) {
  std::uint64_t h = 14695981039346656037ULL ^ seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

inline std::string fnv1a64_hex(const std::string& data, std::uint64_t seed = kHashSeed) {
  return to_hex(fnv1a64(data, seed));
}

}  // namespace bpa
