#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "oddevil/types.hpp"

namespace oddevil {

/// sum_{l=0}^{r} residue(a - l, d) for a, r in [0, d-1], in closed form:
/// a(r+1) - r(r+1)/2 + d*max(r - a, 0).
[[nodiscard]] SumValue residue_run_sum(std::int64_t a, std::int64_t r, Radix d);

/// sum_{k=0}^{N} term(spec, k) in closed form. Let q = floor(N/d),
/// r = N mod d and a = residue(j - t_d(q)); the value is
///   d N(N+1)/2 + q d(d-1)/2 + residue_run_sum(a, r, d).
[[nodiscard]] SumValue summatory(const SequenceSpec& spec, std::int64_t n_upto);

/// S(n) = a(0) + ... + a(n) by the binary parity split:
/// n odd: n^2 + (3n+1)/2; n even: n^2 + 3n/2 + 1 - t(n).
[[nodiscard]] SumValue odious_summatory(std::int64_t n);
/// R(n) = b(0) + ... + b(n): as S(n), with + t(n) instead of + 1 - t(n) for even n.
[[nodiscard]] SumValue evil_summatory(std::int64_t n);

enum class CrossIdentity {
  kOdiousUptoEvil,    // sum_{k<=b(n)} a(k) = b(n)^2 + b(n) + n + 1
  kEvilUptoOdious,    // sum_{k<=a(n)} b(k) = a(n)^2 + a(n) + n + 1
  kOdiousUptoOdious,  // sum_{k<=a(n)} a(k) = a(n)^2 + 2a(n) - n
  kEvilUptoEvil,      // sum_{k<=b(n)} b(k) = b(n)^2 + 2b(n) - n
};

[[nodiscard]] std::string_view name(CrossIdentity kind) noexcept;

struct CrossValues {
  SumValue lhs;
  SumValue rhs;
  friend bool operator==(const CrossValues&, const CrossValues&) = default;
};

/// Both sides of a cross identity at n. Callers compare them.
[[nodiscard]] CrossValues cross_identity(CrossIdentity kind, std::int64_t n);

/// b(n)^2 + 2b(n) - n^2: the evil-upto-evil right side as it is sometimes
/// printed. It is wrong (already at n = 2); kept so the discrepancy stays
/// visible in tests.
[[nodiscard]] SumValue evil_upto_evil_quadratic_rhs(std::int64_t n);

enum class NumberClass { kOdious, kEvil };

/// Sum of all odious (resp. evil) numbers <= n, via the n mod 4 case formulas.
[[nodiscard]] SumValue bounded_sum(NumberClass cls, std::int64_t n);

/// Number of odious numbers <= n: floor((n-1)/2) + 1 + [n even and t(n) = 1].
[[nodiscard]] std::int64_t odious_count_upto(std::int64_t n);

}  // namespace oddevil
