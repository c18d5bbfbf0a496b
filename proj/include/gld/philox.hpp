#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace gld {

/// Philox4x32-10 counter-based generator. A block is a pure function of
/// (counter, key), so any (seed, stream, index) triple can be sampled out
/// of order; Monte Carlo shards get bit-identical results regardless of
/// scheduling.
struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

namespace rng {

inline std::array<std::uint32_t, 4> raw(std::uint64_t seed, std::uint64_t stream,
                                        std::uint64_t index) {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                            static_cast<std::uint32_t>(seed >> 32)};
  return Philox4x32::block(ctr, key);
}

/// Uniform draw in the open interval (0,1) from one Philox block.
inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  const auto w = raw(seed, stream, index);
  const std::uint64_t bits = (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Two independent N(0,1) draws (Box-Muller) from one Philox block.
inline std::pair<double, double> gaussian_pair(std::uint64_t seed, std::uint64_t stream,
                                               std::uint64_t index) {
  const auto w = raw(seed, stream, index);
  const std::uint64_t b0 = (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
  const std::uint64_t b1 = (static_cast<std::uint64_t>(w[2]) << 32) | w[3];
  const double u1 = (static_cast<double>(b0 >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = (static_cast<double>(b1 >> 11) + 0.5) * 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

inline double gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return gaussian_pair(seed, stream, index).first;
}

/// Derives a child seed; used to keep independent sampling stages
/// (e.g. the two routes of a scaling check) on disjoint streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  const auto w = raw(seed, 0xC0FFEEull, salt);
  return (static_cast<std::uint64_t>(w[0]) << 32) | w[2];
}

}  // namespace rng
}  // namespace gld
