#pragma once

#include <cstdint>

#include "oddevil/types.hpp"

namespace oddevil {

/// Residue of x modulo d in [0, d-1], with floor semantics for negative x:
/// x == d * floor(x / d) + residue(x, d).
[[nodiscard]] Letter residue(std::int64_t x, Radix d) noexcept;

/// Sum of the base-d digits of n. Throws DomainError for n < 0.
[[nodiscard]] std::int64_t digit_sum(std::int64_t n, Radix d);

/// Generalized Thue-Morse value: digit_sum(n, d) mod d.
[[nodiscard]] Letter thue_morse(std::int64_t n, Radix d);

/// Same value as thue_morse, computed through the block recurrence
/// t(d*n + alpha) = residue(t(n) + alpha). Kept as an independent route for
/// cross-validation.
[[nodiscard]] Letter thue_morse_recursive(std::int64_t n, Radix d);

}  // namespace oddevil
