#pragma once

#include <cstdint>
#include <string>
#include <type_traits>

#include "oddevil/errors.hpp"

namespace oddevil {

using Int128 = __int128;

namespace checked {

template <typename T>
concept CheckedInt = std::is_same_v<T, std::int64_t> || std::is_same_v<T, Int128>;

template <CheckedInt T>
[[nodiscard]] inline T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in addition");
  return r;
}

template <CheckedInt T>
[[nodiscard]] inline T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("integer overflow in subtraction");
  return r;
}

template <CheckedInt T>
[[nodiscard]] inline T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in multiplication");
  return r;
}

/// Division that must be exact; a remainder means a formula was applied
/// outside its hypotheses.
template <CheckedInt T>
[[nodiscard]] T div_exact(T a, T b, const char* what) {
  if (b == 0 || a % b != 0) throw InvariantViolation(std::string("inexact division: ") + what);
  return a / b;
}

[[nodiscard]] inline std::int64_t narrow(Int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticError("value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace checked

[[nodiscard]] inline std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work in the negative range so INT128_MIN does not overflow.
  std::string digits;
  while (v != 0) {
    int digit = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace oddevil
