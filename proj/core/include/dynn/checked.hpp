#pragma once

#include <cstdint>

#include "dynn/errors.hpp"

namespace dynn {

// Overflow-checked 64-bit arithmetic. Coordinate entries can grow roughly
// quadratically with the input magnitude during a reduction, so every sum in
// a coordinate formula goes through these helpers and a wrap surfaces as
// OverflowError instead of silent garbage.
namespace checked {

[[noreturn]] inline void overflow() {
  throw OverflowError("64-bit overflow in coordinate arithmetic");
}

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) overflow();
  return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) overflow();
  return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

inline std::int64_t abs(std::int64_t x) { return x < 0 ? neg(x) : x; }

inline std::int64_t twice(std::int64_t x) { return add(x, x); }

}  // namespace checked

// Positive part max(x, 0); appears throughout the coordinate update rules.
constexpr std::int64_t pos_part(std::int64_t x) { return x > 0 ? x : 0; }

// Smallest integer >= x/2, for nonnegative x.
constexpr std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

}  // namespace dynn
