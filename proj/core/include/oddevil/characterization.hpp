#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oddevil/report.hpp"

namespace oddevil {

/// Largest prefix length the forced constructors will build.
inline constexpr std::int64_t kConstructionBudget = 100'000'000;
/// Largest prefix length the uniqueness search will explore.
inline constexpr std::int64_t kSearchBudget = 24;

enum class Side : std::uint8_t { kX, kY };

/// Two candidate sequences x and y under construction, plus which of them
/// each used value belongs to.
///
/// Invariants: x and y are strictly increasing and disjoint, and every
/// value below frontier() is used.
class ConstructionState {
 public:
  [[nodiscard]] const std::vector<std::int64_t>& x() const noexcept { return x_; }
  [[nodiscard]] const std::vector<std::int64_t>& y() const noexcept { return y_; }
  [[nodiscard]] std::size_t length() const noexcept { return x_.size(); }

  /// Smallest unused value.
  [[nodiscard]] std::int64_t frontier() const noexcept { return frontier_; }
  [[nodiscard]] bool used(std::int64_t v) const noexcept;
  /// Which sequence value v was assigned to, if any.
  [[nodiscard]] std::optional<Side> side_of(std::int64_t v) const noexcept;

  /// Appends x(n) = xv, y(n) = yv. Throws ConstructionError if either value
  /// is already used, negative, equal to the other, or breaks monotonicity.
  void append(std::int64_t xv, std::int64_t yv);

  /// Full O(length) recheck of the class invariants.
  [[nodiscard]] bool invariants_hold() const;

 private:
  void mark(std::int64_t v, Side s);

  std::vector<std::int64_t> x_;
  std::vector<std::int64_t> y_;
  // 0 = unused, 1 = X, 2 = Y; indexed by value.
  std::vector<std::uint8_t> membership_;
  std::int64_t frontier_ = 0;
};

struct SequencePair {
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;
  friend bool operator==(const SequencePair&, const SequencePair&) = default;
  friend auto operator<=>(const SequencePair&, const SequencePair&) = default;
};

using StepObserver = std::function<void(const ConstructionState&)>;

/// Greedy construction: x(0) = 1, y(0) = 0, then x(n), y(n) take the two
/// smallest unused integers, ordered so that x(x(k)), y(y(k)) are even and
/// x(y(k)), y(x(k)) are odd. The side of index n decides the order.
/// `observe`, when set, sees the state after every step.
[[nodiscard]] SequencePair construct_parity(std::int64_t length, const StepObserver& observe = {});

/// Forced construction from x(x(n)) = y(x(n)) - 1 and y(y(n)) = x(y(n)) - 1:
/// for n in X, x(n) takes the smallest unused value and y(n) = x(n) + 1;
/// for n in Y the roles swap.
[[nodiscard]] SequencePair construct_offset(std::int64_t length, const StepObserver& observe = {});

/// Exhaustive backtracking over pairs of disjoint increasing sequences of
/// the given length that can still cover an initial segment of the
/// naturals, keeping those that violate no checkable instance of
/// x(x(n)) = 2x(n), y(y(n)) = 2y(n), |x(n) - y(n)| = 1 (an instance is
/// checkable when every index it touches is inside the prefix). Results are
/// sorted lexicographically. Throws ResourceError above kSearchBudget.
[[nodiscard]] std::vector<SequencePair> search_partition_solutions(std::int64_t length);

/// Checks the eight composition relations between odious and evil numbers
/// on [0, n_max]; one report per relation, in order (i)..(viii).
[[nodiscard]] std::vector<VerificationReport> verify_relations(std::int64_t n_max,
                                                               unsigned jobs = 1);

}  // namespace oddevil
