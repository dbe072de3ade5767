#pragma once

#include <cstdint>

#include "oddevil/types.hpp"

namespace oddevil {

// Closed-form access to a_{j,d}, the increasing sequence of integers whose
// base-d digit sum is congruent to j mod d. Indices start at 0.

/// n-th member: d*n + residue(j - t_d(n), d). Throws ArithmeticError on
/// overflow and DomainError for n < 0.
[[nodiscard]] std::int64_t term(const SequenceSpec& spec, std::int64_t n);

/// Equivalent form d*n + d - 1 - t_d(d*n + d - 1 - j). Exists to
/// cross-check term().
[[nodiscard]] std::int64_t term_reflected(const SequenceSpec& spec, std::int64_t n);

/// Odious numbers: 2n + 1 - t(n).
[[nodiscard]] std::int64_t odious(std::int64_t n);
/// Evil numbers: 2n + t(n).
[[nodiscard]] std::int64_t evil(std::int64_t n);

[[nodiscard]] bool is_member(std::int64_t k, const SequenceSpec& spec);

/// Inverse of term(): the index of member k, i.e. floor(k / d). Throws
/// DomainError naming the actual class of k when k is not a member.
[[nodiscard]] std::int64_t rank(std::int64_t k, const SequenceSpec& spec);

/// a_{outer,d}(a_{inner,d}(n)) through d * a_{inner,d}(n) + residue(outer - inner, d).
[[nodiscard]] std::int64_t compose(std::int64_t outer, std::int64_t inner, Radix d,
                                   std::int64_t n);

}  // namespace oddevil
