#pragma once

#include <cstdint>
#include <random>

#include "dynn/braid.hpp"
#include "dynn/coords.hpp"

namespace dynn {

// Deterministic sampling. The engine is mt19937_64 and bounded draws use
// modulo with rejection of the biased tail, so a seed produces the same
// stream on every platform; std::uniform_int_distribution is deliberately
// avoided because its output is implementation-defined.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform on [lo, hi], inclusive; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // Uniform nonzero coordinate vector with entries in [-range, range];
  // all-zero draws are resampled.
  DynnikovCoordinates lamination(int punctures, std::int64_t range);

  // Word of exactly `length` uniform generators of B_punctures, each
  // inverted with probability 1/2.
  BraidWord word(int punctures, int length);

 private:
  std::mt19937_64 engine_;
};

// Stable derivation of per-task seeds from a master seed and two salts
// (splitmix64 steps), so benchmark cells and test corpora are independent
// yet reproducible.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt_a,
                       std::uint64_t salt_b);

}  // namespace dynn
