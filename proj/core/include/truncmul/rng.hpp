#pragma once

#include <cstdint>
#include <random>

#include "truncmul/bigint.hpp"

namespace truncmul {

/// Independent random streams derived from one user seed.
enum class RngStream : std::uint64_t {
  Params = 0,
  Secrets = 1,
  Harness = 2,
};

/// Deterministic generator for big integers. Built on std::mt19937_64 and
/// std::seed_seq, both fully specified by the standard, so a (seed, stream)
/// pair yields the same values on every conforming implementation.
class SeededRng {
 public:
  SeededRng(std::uint64_t seed, RngStream stream);

  /// Uniform over [0, 2^bits).
  Int random_bits(unsigned bits);

  /// Uniform over [lo, hi] for machine-size bounds.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace truncmul
