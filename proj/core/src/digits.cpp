#include "oddevil/digits.hpp"

#include <string>

namespace oddevil {

namespace {

void require_natural(std::int64_t n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": expected n >= 0, got " + std::to_string(n));
}

}  // namespace

Letter residue(std::int64_t x, Radix d) noexcept {
  const std::int64_t m = d.value();
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return static_cast<Letter>(r);
}

std::int64_t digit_sum(std::int64_t n, Radix d) {
  require_natural(n, "digit_sum");
  const std::int64_t base = d.value();
  std::int64_t sum = 0;
  while (n != 0) {
    sum += n % base;
    n /= base;
  }
  return sum;
}

Letter thue_morse(std::int64_t n, Radix d) {
  return residue(digit_sum(n, d), d);
}

Letter thue_morse_recursive(std::int64_t n, Radix d) {
  require_natural(n, "thue_morse_recursive");
  if (n == 0) return 0;
  const std::int64_t base = d.value();
  const auto parent = thue_morse_recursive(n / base, d);
  return residue(static_cast<std::int64_t>(parent) + n % base, d);
}

}  // namespace oddevil
