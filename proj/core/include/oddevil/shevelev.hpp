#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "oddevil/report.hpp"
#include "oddevil/types.hpp"

namespace oddevil {

/// Comparison of two integers by their residues mod 4, read as naturals.
enum class Mod4Ordering { kLess, kEqual, kGreater };

[[nodiscard]] Mod4Ordering compare_mod4(std::int64_t x, std::int64_t y) noexcept;

/// Which hypothesis pair of the odious summatory theorem holds at n, on the
/// window a(n-1), a(n), a(n+1), a(n+2):
///   I:   a(n-1) <4 a(n+1) and a(n) <=4 a(n+2)
///   II:  a(n-1) >4 a(n+1) and a(n) >=4 a(n+2)
///   III: a(n-1) <4 a(n+1) and a(n) >4  a(n+2)
///   IV:  a(n-1) >4 a(n+1) and a(n) <4  a(n+2)
/// kNone when a(n-1) and a(n+1) share a residue.
enum class ShevelevCase { kI, kII, kIII, kIV, kNone };

inline constexpr std::array<ShevelevCase, 5> kAllShevelevCases = {
    ShevelevCase::kI, ShevelevCase::kII, ShevelevCase::kIII, ShevelevCase::kIV,
    ShevelevCase::kNone};

[[nodiscard]] std::string_view name(ShevelevCase c) noexcept;

/// The four hypothesis predicates evaluated independently, in case order.
[[nodiscard]] std::array<bool, 4> shevelev_hypotheses(std::int64_t n);

/// Throws DomainError for n < 2.
[[nodiscard]] ShevelevCase classify_shevelev(std::int64_t n);

/// Right-hand side for a case at n:
///   I: a(n)a(n+1)/4           II: (a(n)a(n+1) + 2)/4
///   III: a(n)(a(n+1) - 1)/4   IV: (a(n) + 1)a(n+1)/4
/// Throws InvariantViolation if the division is inexact, which happens only
/// when the case's hypothesis does not hold at n.
[[nodiscard]] SumValue shevelev_rhs(ShevelevCase c, std::int64_t n);

struct ShevelevReport {
  VerificationReport report;
  /// Indexed by ShevelevCase.
  std::array<std::uint64_t, 5> case_counts{};

  [[nodiscard]] bool passed() const noexcept { return report.passed(); }
  [[nodiscard]] std::uint64_t count(ShevelevCase c) const noexcept {
    return case_counts[static_cast<std::size_t>(c)];
  }
};

/// Checks S(n) == shevelev_rhs(classify(n), n) for every classified n in
/// [lo, hi]; unclassified n are counted under kNone. Requires 2 <= lo <= hi.
[[nodiscard]] ShevelevReport verify_shevelev(std::int64_t lo, std::int64_t hi, unsigned jobs = 1);

}  // namespace oddevil
