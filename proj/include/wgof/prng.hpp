#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgof {

// Keyed deterministic pseudorandomness. Everything in this header is a pure
// function of its arguments and reproduces bit-exactly across platforms, so
// generation-side and detection-side computations can be replayed at will.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  std::uint64_t z = x + kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Watermark key. Identity is the exact byte content.
struct SecretKey {
  std::vector<std::uint8_t> bytes;

  SecretKey() = default;
  explicit SecretKey(std::vector<std::uint8_t> b) : bytes(std::move(b)) {
    if (bytes.empty() || bytes.size() > 64) {
      throw std::invalid_argument("SecretKey: length must be 1-64 bytes");
    }
  }
  // Key from a 64-bit integer, little-endian.
  static SecretKey from_u64(std::uint64_t v) {
    std::vector<std::uint8_t> b(8);
    for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v >> (8 * i));
    return SecretKey(std::move(b));
  }
  static SecretKey from_hex(const std::string& hex);
  std::string to_hex() const;
};

// Seed derived from (key, m-gram context); the per-position randomness source.
struct ContextSeed {
  std::uint64_t value = 0;
  friend bool operator==(const ContextSeed&, const ContextSeed&) = default;
};

// Hash an m-gram context with the key: absorb (key bytes || little-endian
// 32-bit token ids), zero-padded to an 8-byte multiple, one 64-bit block at a
// time through state <- mix64(state ^ block).
ContextSeed derive_seed(const SecretKey& key, std::span<const std::uint32_t> context);

// index-th uniform variate of a seed's stream, on the 53-bit grid in [0,1).
inline double uniform(ContextSeed seed, std::uint64_t index) noexcept {
  const std::uint64_t bits = mix64(seed.value ^ ((index + 1) * kGolden));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Fisher-Yates permutation of {0..size-1} driven by uniform(seed, 0..size-2).
std::vector<std::uint32_t> permutation(ContextSeed seed, std::uint32_t size);

// Standard normal via Box-Muller (cosine branch) on uniforms 2*index, 2*index+1.
double gaussian(ContextSeed seed, std::uint64_t index) noexcept;

}  // namespace wgof
