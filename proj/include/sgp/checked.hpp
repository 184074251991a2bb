#pragma once

#include <cstdint>
#include <limits>

#include "sgp/error.hpp"

namespace sgp {

using Int = std::int64_t;

// Overflow never wraps: every helper below raises ErrorKind::Overflow.

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) raise(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) raise(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) raise(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace sgp
