#pragma once

#include <cstdint>

namespace promax {

// splitmix64 finalizer. Substream derivation below hashes (base seed, index)
// with it, so every Monte-Carlo run owns a stream that depends only on its
// index, never on execution order or worker count.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t substream(std::uint64_t base, std::uint64_t a) noexcept {
  return mix64(base ^ mix64(a));
}

constexpr std::uint64_t substream(std::uint64_t base, std::uint64_t a,
                                  std::uint64_t b) noexcept {
  return substream(substream(base, a), b);
}

constexpr std::uint64_t substream(std::uint64_t base, std::uint64_t a,
                                  std::uint64_t b, std::uint64_t c) noexcept {
  return substream(substream(base, a, b), c);
}

// Counter-based generator (splitmix64). Seeding is free, which matters when
// every simulation run is handed its own derived stream.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1).
  constexpr double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Stream tags. Keeping them distinct means the weight sampler, the diffusion
// runs, and the optimizer's evaluation streams never alias.
namespace stream {
constexpr std::uint64_t kProfitRun = 0xd1f1;
constexpr std::uint64_t kSpreadRun = 0xd1f2;
constexpr std::uint64_t kCondAdoptRun = 0xd1f3;
constexpr std::uint64_t kCondRejectRun = 0xd1f4;
constexpr std::uint64_t kTrivalencyDraw = 0x7e11;
constexpr std::uint64_t kBaselineEval = 0x0b51;
constexpr std::uint64_t kMarginalEval = 0x0b52;
constexpr std::uint64_t kRefreshEval = 0x0b53;
}  // namespace stream

}  // namespace promax
