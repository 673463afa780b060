#pragma once

#include <cstdint>

namespace motifclose {

// xoshiro256** seeded through SplitMix64. Streams are derived from a base
// seed and a stream index so that each trial owns an independent,
// reproducible sequence:
//
//   x = seed + (stream + 1) * 0xD1B54A32D192ED03
//   state[0..3] = four successive SplitMix64 outputs starting from x
//
// Bounded draws use Lemire's multiply-shift with rejection, so results are
// identical on every platform.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next(); }

 private:
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace motifclose
