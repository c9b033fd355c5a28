#include "dynn/random.hpp"

#include <limits>

#include "dynn/errors.hpp"

namespace dynn {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw PreconditionError("uniform needs lo <= hi");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) {
    // Full 64-bit range.
    return static_cast<std::int64_t>(engine_());
  }
  // Accept draws below the largest multiple of span; the remainder would
  // bias low values.
  const std::uint64_t rem =
      (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
  const std::uint64_t tail = std::numeric_limits<std::uint64_t>::max() - rem;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw > tail);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   draw % span);
}

DynnikovCoordinates Sampler::lamination(int punctures, std::int64_t range) {
  if (punctures < 3) throw PreconditionError("lamination needs >= 3 punctures");
  if (range < 1) throw PreconditionError("lamination needs range >= 1");
  const std::size_t pairs = static_cast<std::size_t>(punctures) - 2;
  std::vector<std::int64_t> a(pairs), b(pairs);
  while (true) {
    bool nonzero = false;
    for (std::size_t i = 0; i < pairs; ++i) {
      a[i] = uniform(-range, range);
      b[i] = uniform(-range, range);
      nonzero = nonzero || a[i] != 0 || b[i] != 0;
    }
    if (nonzero) return DynnikovCoordinates(a, b);
  }
}

BraidWord Sampler::word(int punctures, int length) {
  if (punctures < 3) throw PreconditionError("word needs >= 3 punctures");
  if (length < 0) throw PreconditionError("word needs length >= 0");
  BraidWord w;
  w.gens.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) {
    const int index = static_cast<int>(uniform(1, punctures - 1));
    const int sign = uniform(0, 1) == 0 ? 1 : -1;
    w.gens.push_back({index, sign});
  }
  return w;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt_a,
                       std::uint64_t salt_b) {
  return splitmix64(splitmix64(seed ^ splitmix64(salt_a)) ^ splitmix64(salt_b));
}

}  // namespace dynn
