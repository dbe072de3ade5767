#include "oddevil/shevelev.hpp"

#include <atomic>
#include <string>

#include "oddevil/digits.hpp"
#include "oddevil/sequences.hpp"
#include "oddevil/summation.hpp"

namespace oddevil {

namespace {

const Radix kMod4(4);

struct Window {
  std::int64_t prev, cur, next, after;
};

Window window_at(std::int64_t n) {
  return {odious(n - 1), odious(n), odious(n + 1), odious(checked::add<std::int64_t>(n, 2))};
}

void require_at_least_two(std::int64_t n) {
  if (n < 2) throw DomainError("Shevelev classification needs n >= 2, got " + std::to_string(n));
}

}  // namespace

Mod4Ordering compare_mod4(std::int64_t x, std::int64_t y) noexcept {
  const Letter rx = residue(x, kMod4);
  const Letter ry = residue(y, kMod4);
  if (rx < ry) return Mod4Ordering::kLess;
  if (rx > ry) return Mod4Ordering::kGreater;
  return Mod4Ordering::kEqual;
}

std::string_view name(ShevelevCase c) noexcept {
  switch (c) {
    case ShevelevCase::kI: return "I";
    case ShevelevCase::kII: return "II";
    case ShevelevCase::kIII: return "III";
    case ShevelevCase::kIV: return "IV";
    case ShevelevCase::kNone: return "NONE";
  }
  return "?";
}

std::array<bool, 4> shevelev_hypotheses(std::int64_t n) {
  require_at_least_two(n);
  const Window w = window_at(n);
  const Mod4Ordering outer = compare_mod4(w.prev, w.next);
  const Mod4Ordering inner = compare_mod4(w.cur, w.after);
  return {
      outer == Mod4Ordering::kLess && inner != Mod4Ordering::kGreater,
      outer == Mod4Ordering::kGreater && inner != Mod4Ordering::kLess,
      outer == Mod4Ordering::kLess && inner == Mod4Ordering::kGreater,
      outer == Mod4Ordering::kGreater && inner == Mod4Ordering::kLess,
  };
}

ShevelevCase classify_shevelev(std::int64_t n) {
  const auto holds = shevelev_hypotheses(n);
  for (std::size_t i = 0; i < holds.size(); ++i) {
    if (holds[i]) return static_cast<ShevelevCase>(i);
  }
  return ShevelevCase::kNone;
}

SumValue shevelev_rhs(ShevelevCase c, std::int64_t n) {
  require_at_least_two(n);
  const Int128 cur = odious(n);
  const Int128 next = odious(checked::add<std::int64_t>(n, 1));
  switch (c) {
    case ShevelevCase::kI:
      return SumValue(checked::div_exact<Int128>(checked::mul(cur, next), 4, "case I"));
    case ShevelevCase::kII:
      return SumValue(checked::div_exact<Int128>(checked::mul(cur, next) + 2, 4, "case II"));
    case ShevelevCase::kIII:
      return SumValue(checked::div_exact<Int128>(checked::mul(cur, next - 1), 4, "case III"));
    case ShevelevCase::kIV:
      return SumValue(checked::div_exact<Int128>(checked::mul(cur + 1, next), 4, "case IV"));
    case ShevelevCase::kNone:
      break;
  }
  throw DomainError("no right-hand side for an unclassified n");
}

ShevelevReport verify_shevelev(std::int64_t lo, std::int64_t hi, unsigned jobs) {
  require_at_least_two(lo);
  if (hi < lo) {
    throw DomainError("verify range needs lo <= hi, got [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }

  // Case counts are tallied per shard up to that shard's first failure, then
  // recomputed serially below when a failure makes them order dependent.
  std::array<std::atomic<std::uint64_t>, 5> counts{};
  ShevelevReport out;
  out.report = sweep("shevelev", lo, hi, jobs, [&](std::int64_t n) -> std::optional<std::string> {
    const ShevelevCase c = classify_shevelev(n);
    counts[static_cast<std::size_t>(c)].fetch_add(1, std::memory_order_relaxed);
    if (c == ShevelevCase::kNone) return std::nullopt;
    const SumValue lhs = odious_summatory(n);
    SumValue rhs;
    try {
      rhs = shevelev_rhs(c, n);
    } catch (const InvariantViolation& e) {
      return std::string("case ") + std::string(name(c)) + ": " + e.what();
    }
    if (lhs != rhs) {
      return std::string("case ") + std::string(name(c)) + ": S=" + lhs.str() + " rhs=" + rhs.str();
    }
    return std::nullopt;
  });

  for (std::size_t i = 0; i < counts.size(); ++i) out.case_counts[i] = counts[i].load();
  if (!out.passed()) {
    out.case_counts = {};
    for (std::int64_t n = lo; n <= out.report.first_counterexample->n; ++n) {
      ++out.case_counts[static_cast<std::size_t>(classify_shevelev(n))];
    }
  }
  return out;
}

}  // namespace oddevil
