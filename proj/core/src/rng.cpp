#include "hubness/rng.hpp"

#include <cmath>
#include <numbers>

namespace hubness {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

std::array<std::uint64_t, 2> CounterRng::bits(std::uint64_t index) const noexcept {
  const auto out = philox4x32_10(
      {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
       static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
      {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
  return {static_cast<std::uint64_t>(out[0]) | (static_cast<std::uint64_t>(out[1]) << 32),
          static_cast<std::uint64_t>(out[2]) | (static_cast<std::uint64_t>(out[3]) << 32)};
}

double CounterRng::uniform(std::uint64_t index) const noexcept {
  return static_cast<double>(bits(index)[0] >> 11) * kTwoPow53Inv;
}

std::uint64_t CounterRng::below(std::uint64_t index, std::uint64_t bound) const noexcept {
  const unsigned __int128 wide = static_cast<unsigned __int128>(bits(index)[0]) * bound;
  return static_cast<std::uint64_t>(wide >> 64);
}

std::pair<double, double> CounterRng::normal_pair(std::uint64_t index) const noexcept {
  const auto w = bits(index);
  const double u1 = static_cast<double>((w[0] >> 11) + 1) * kTwoPow53Inv;
  const double u2 = static_cast<double>(w[1] >> 11) * kTwoPow53Inv;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

double CounterRng::normal(std::uint64_t index) const noexcept {
  const auto [z0, z1] = normal_pair(index / 2);
  return index % 2 == 0 ? z0 : z1;
}

}  // namespace hubness
