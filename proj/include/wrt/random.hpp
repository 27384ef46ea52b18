#pragma once

#include <array>
#include <cstdint>

namespace wrt {

// Counter-free splittable RNG: xoshiro256++ seeded through splitmix64.
// A (seed, stream) pair fully determines the draw sequence, independent of
// platform and of any other stream, so replicated experiments can hand one
// stream id to each replication and stay reproducible under any scheduling.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next_u64() noexcept;

  // Uniform double in [0, 1), 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), bound >= 1. Unbiased (rejection step).
  std::uint64_t next_below(std::uint64_t bound) noexcept;

 private:
  std::array<std::uint64_t, 4> state_;
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace wrt
