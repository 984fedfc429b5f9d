#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace hubness {

// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as
// 1, 2, 3"). A keyed bijection on 128-bit counters: output i depends only on
// (key, i), so any element of a random stream can be produced independently.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

// Seeded counter-based generator. The 64-bit seed is the Philox key; the
// 128-bit counter is (index, stream) with `index` in the low words. Draws are
// pure functions of (seed, stream, index), so parallel consumers that agree on
// the index assignment produce identical results.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  // Two independent 64-bit words for `index`.
  std::array<std::uint64_t, 2> bits(std::uint64_t index) const noexcept;

  // Uniform on [0, 1) with 53 random bits.
  double uniform(std::uint64_t index) const noexcept;

  // Integer in [0, bound) by 64x64 multiply-high; bound must be > 0.
  std::uint64_t below(std::uint64_t index, std::uint64_t bound) const noexcept;

  // Box-Muller on one Philox block: u1 = (w0 >> 11 + 1) * 2^-53 in (0, 1],
  // u2 = (w1 >> 11) * 2^-53, giving (r cos 2 pi u2, r sin 2 pi u2) with
  // r = sqrt(-2 ln u1).
  std::pair<double, double> normal_pair(std::uint64_t index) const noexcept;

  // Standard normal number `index` of the stream: element 2i and 2i+1 are
  // the two halves of normal_pair(i).
  double normal(std::uint64_t index) const noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

// Fixed stream labels so unrelated consumers of one seed never overlap.
namespace streams {
inline constexpr std::uint64_t gaussian = 0x4741555353ull;      // "GAUSS"
inline constexpr std::uint64_t pair_sampler = 0x5041495253ull;  // "PAIRS"
inline constexpr std::uint64_t peaked = 0x5045414B4544ull;       // "PEAKED"
inline constexpr std::uint64_t sweep = 0x5357454550ull;         // "SWEEP"
}  // namespace streams

}  // namespace hubness
