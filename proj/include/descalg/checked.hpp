#pragma once

#include <cstdint>

#include "descalg/error.hpp"

namespace descalg {

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

}  // namespace descalg
