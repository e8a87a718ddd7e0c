#pragma once

#include <cstdint>

namespace strategos {

// PCG32: small deterministic generator with explicit, serializable state.
// std::uniform_* distributions are not bit-stable across standard library
// implementations, so all game randomness goes through these helpers.
class Rng {
 public:
  Rng() = default;

  static Rng seeded(std::uint64_t seed, std::uint64_t stream = 54u) {
    Rng r;
    r.state_ = 0u;
    r.inc_ = (stream << 1u) | 1u;
    r.next();
    r.state_ += seed;
    r.next();
    return r;
  }

  static Rng from_raw(std::uint64_t state, std::uint64_t inc) {
    Rng r;
    r.state_ = state;
    r.inc_ = inc;
    return r;
  }

  std::uint32_t next() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  // Uniform integer in [0, bound), bias-free via rejection.
  std::uint32_t below(std::uint32_t bound) {
    if (bound <= 1u) return 0u;
    const std::uint32_t threshold = (0u - bound) % bound;
    for (;;) {
      const std::uint32_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int32_t range(std::int32_t lo, std::int32_t hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<std::int32_t>(below(static_cast<std::uint32_t>(hi - lo + 1)));
  }

  std::uint64_t state() const { return state_; }
  std::uint64_t inc() const { return inc_; }

 private:
  std::uint64_t state_ = 0x853c49e6748fea9bULL;
  std::uint64_t inc_ = 0xda3e39cb94b95bdbULL;
};

}  // namespace strategos
