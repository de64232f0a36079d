#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace siladic {

// Exact count / coefficient type. All table and series arithmetic goes
// through the helpers below; overflow raises instead of wrapping.
using count_t = std::int64_t;

inline count_t checked_add(count_t a, count_t b) {
  count_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit count overflow in " + std::to_string(a) +
                              " + " + std::to_string(b));
  }
  return r;
}

inline count_t checked_sub(count_t a, count_t b) {
  count_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit count overflow in " + std::to_string(a) +
                              " - " + std::to_string(b));
  }
  return r;
}

inline count_t checked_mul(count_t a, count_t b) {
  count_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit count overflow in " + std::to_string(a) +
                              " * " + std::to_string(b));
  }
  return r;
}

}  // namespace siladic
