#ifndef MODBRAID_ARITH_HPP_
#define MODBRAID_ARITH_HPP_

#include <cstdint>

#include "error.hpp"

namespace modbraid::detail {

  inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw Overflow("int64 overflow in addition");
    }
    return r;
  }

  inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw Overflow("int64 overflow in subtraction");
    }
    return r;
  }

  inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw Overflow("int64 overflow in multiplication");
    }
    return r;
  }

  // Representative in [0, m) for m > 0.
  inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
  }

}  // namespace modbraid::detail

#endif  // MODBRAID_ARITH_HPP_
