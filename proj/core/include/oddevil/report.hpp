#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "oddevil/errors.hpp"

namespace oddevil {

struct Counterexample {
  std::int64_t n;
  std::string detail;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of checking one identity over an index range [lo, hi].
struct VerificationReport {
  std::string identity;
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::uint64_t checked = 0;
  std::optional<Counterexample> first_counterexample;

  [[nodiscard]] bool passed() const noexcept { return !first_counterexample.has_value(); }

  /// Combines reports for adjacent or overlapping shards of the same
  /// identity. Associative and commutative; the surviving counterexample is
  /// the one with minimal n.
  void merge(const VerificationReport& other) {
    lo = std::min(lo, other.lo);
    hi = std::max(hi, other.hi);
    checked += other.checked;
    if (other.first_counterexample &&
        (!first_counterexample || other.first_counterexample->n < first_counterexample->n)) {
      first_counterexample = other.first_counterexample;
    }
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Splits [lo, hi] into at most `jobs` contiguous shards.
[[nodiscard]] inline std::vector<std::pair<std::int64_t, std::int64_t>> shard_range(
    std::int64_t lo, std::int64_t hi, unsigned jobs) {
  std::vector<std::pair<std::int64_t, std::int64_t>> shards;
  if (hi < lo) return shards;
  jobs = std::max(1u, jobs);
  const __int128 span = static_cast<__int128>(hi) - lo + 1;
  const __int128 per = (span + jobs - 1) / jobs;
  for (__int128 start = lo; start <= hi; start += per) {
    const __int128 end = std::min<__int128>(hi, start + per - 1);
    shards.emplace_back(static_cast<std::int64_t>(start), static_cast<std::int64_t>(end));
  }
  return shards;
}

/// Runs `check` on every n in [lo, hi], sharded over `jobs` threads.
/// `check(n)` returns a failure description, or nullopt when the identity
/// holds. An ArithmeticError raised by `check` counts as a failure at n.
/// The result does not depend on `jobs`.
template <typename Check>
[[nodiscard]] VerificationReport sweep(const std::string& identity, std::int64_t lo,
                                       std::int64_t hi, unsigned jobs, Check check) {
  auto run_shard = [&](std::int64_t a, std::int64_t b) {
    VerificationReport rep{identity, a, b, 0, std::nullopt};
    for (std::int64_t n = a; n <= b; ++n) {
      ++rep.checked;
      std::optional<std::string> failure;
      try {
        failure = check(n);
      } catch (const ArithmeticError& e) {
        failure = std::string("arithmetic error: ") + e.what();
      }
      if (failure) {
        rep.first_counterexample = Counterexample{n, *failure};
        break;
      }
    }
    return rep;
  };

  VerificationReport total{identity, lo, hi, 0, std::nullopt};
  const auto shards = shard_range(lo, hi, jobs);
  if (shards.size() <= 1) {
    if (!shards.empty()) total = run_shard(lo, hi);
    return total;
  }

  std::vector<VerificationReport> partial(shards.size());
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards.size());
    for (std::size_t i = 0; i < shards.size(); ++i) {
      workers.emplace_back([&, i] { partial[i] = run_shard(shards[i].first, shards[i].second); });
    }
  }
  // A shard stops at its first failure, so "checked" would depend on the
  // sharding once anything fails; report the count up to the first failure.
  total.checked = 0;
  for (const auto& p : partial) total.merge(p);
  if (total.first_counterexample) {
    total.checked = static_cast<std::uint64_t>(total.first_counterexample->n - lo + 1);
  }
  return total;
}

}  // namespace oddevil
