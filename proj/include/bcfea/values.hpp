#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bcfea {

// All profit/cost arithmetic is 64-bit with explicit overflow detection;
// overflow is reported, never wrapped.
using Value = std::int64_t;

struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline Value checked_add(Value a, Value b) {
  Value r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Value checked_sub(Value a, Value b) {
  Value r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Value checked_mul(Value a, Value b) {
  Value r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace bcfea
