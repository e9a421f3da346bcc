#pragma once

#include <cstdint>
#include <random>

namespace grover {

// mt19937_64 with platform-independent draws. The standard distributions are
// implementation-defined, which would break byte-identical CSV output across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  // Independent stream for trial `stream` of an ensemble seeded with `seed`.
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace grover
