#pragma once

#include <cstdint>
#include <vector>

#include "oddevil/types.hpp"

// Brute-force references. This header and its source may depend only on
// types.hpp; they never touch the closed forms they are used to check.
namespace oddevil::oracle {

/// Digit sum by repeated division, then reduced mod d.
[[nodiscard]] Letter thue_morse(std::int64_t n, Radix d);

/// First `count` members of the class, found by scanning 0, 1, 2, ...
[[nodiscard]] std::vector<std::int64_t> terms(const SequenceSpec& spec, std::int64_t count);

/// Running sum of the first n_upto + 1 members.
[[nodiscard]] SumValue sum(const SequenceSpec& spec, std::int64_t n_upto);

/// Sum of all members with value <= bound.
[[nodiscard]] SumValue sum_upto_value(const SequenceSpec& spec, std::int64_t bound);

}  // namespace oddevil::oracle
