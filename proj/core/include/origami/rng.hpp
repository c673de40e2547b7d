#pragma once

#include <cstdint>

namespace origami {

// Counter-based generator: value i of a stream is a pure function of
// (seed, i), so parallel consumers draw identical numbers in any order.
// The mixer is splitmix64.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t at(std::uint64_t counter) const {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0. Modulo bias is irrelevant at our ranges.
  std::uint64_t below(std::uint64_t counter, std::uint64_t n) const {
    return at(counter) % n;
  }

  // Sequential convenience: advances an internal counter.
  std::uint64_t next() { return at(state_++); }
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t seed_;
  std::uint64_t state_ = 0;
};

}  // namespace origami
