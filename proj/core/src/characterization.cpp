#include "oddevil/characterization.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "oddevil/digits.hpp"
#include "oddevil/sequences.hpp"

namespace oddevil {

namespace {

constexpr std::uint8_t kUnused = 0;

std::uint8_t encode(Side s) { return s == Side::kX ? 1 : 2; }

void require_length(std::int64_t length, std::int64_t budget, const char* what) {
  if (length < 0) {
    throw DomainError(std::string(what) + ": length must be >= 0, got " + std::to_string(length));
  }
  if (length > budget) {
    throw ResourceError(std::string(what) + ": length " + std::to_string(length) +
                        " exceeds budget " + std::to_string(budget));
  }
}

Side side_of_index(const ConstructionState& state, std::int64_t n) {
  const auto side = state.side_of(n);
  if (!side) {
    throw ConstructionError("side of index " + std::to_string(n) +
                            " is unknown when it is needed");
  }
  return *side;
}

// Base case shared by both constructors: x(0) = 1, y(0) = 0.
template <typename Step>
SequencePair run_construction(std::int64_t length, const StepObserver& observe, Step step) {
  ConstructionState state;
  for (std::int64_t n = 0; n < length; ++n) {
    if (n == 0) {
      state.append(1, 0);
    } else {
      step(state, n);
    }
    if (observe) observe(state);
  }
  return {state.x(), state.y()};
}

}  // namespace

bool ConstructionState::used(std::int64_t v) const noexcept {
  return v >= 0 && static_cast<std::size_t>(v) < membership_.size() &&
         membership_[static_cast<std::size_t>(v)] != kUnused;
}

std::optional<Side> ConstructionState::side_of(std::int64_t v) const noexcept {
  if (!used(v)) return std::nullopt;
  return membership_[static_cast<std::size_t>(v)] == 1 ? Side::kX : Side::kY;
}

void ConstructionState::mark(std::int64_t v, Side s) {
  const auto idx = static_cast<std::size_t>(v);
  if (idx >= membership_.size()) membership_.resize(std::max(idx + 1, membership_.size() * 2), kUnused);
  membership_[idx] = encode(s);
}

void ConstructionState::append(std::int64_t xv, std::int64_t yv) {
  const auto where = "at n=" + std::to_string(x_.size());
  if (xv < 0 || yv < 0) throw ConstructionError("negative value " + where);
  if (xv == yv) throw ConstructionError("x and y share value " + std::to_string(xv) + " " + where);
  if (used(xv) || used(yv)) throw ConstructionError("value reused " + where);
  if ((!x_.empty() && xv <= x_.back()) || (!y_.empty() && yv <= y_.back())) {
    throw ConstructionError("sequence not increasing " + where);
  }
  mark(xv, Side::kX);
  mark(yv, Side::kY);
  x_.push_back(xv);
  y_.push_back(yv);
  while (used(frontier_)) ++frontier_;
}

bool ConstructionState::invariants_hold() const {
  if (x_.size() != y_.size()) return false;
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (x_[i] <= x_[i - 1] || y_[i] <= y_[i - 1]) return false;
  }
  std::vector<std::uint8_t> seen(membership_.size(), kUnused);
  auto claim = [&](std::int64_t v, Side s) {
    const auto idx = static_cast<std::size_t>(v);
    if (v < 0 || idx >= seen.size() || seen[idx] != kUnused) return false;
    seen[idx] = encode(s);
    return true;
  };
  for (auto v : x_) {
    if (!claim(v, Side::kX)) return false;
  }
  for (auto v : y_) {
    if (!claim(v, Side::kY)) return false;
  }
  if (seen != membership_) return false;
  for (std::int64_t v = 0; v < frontier_; ++v) {
    if (!used(v)) return false;
  }
  return !used(frontier_);
}

SequencePair construct_parity(std::int64_t length, const StepObserver& observe) {
  require_length(length, kConstructionBudget, "construct_parity");
  return run_construction(length, observe, [](ConstructionState& state, std::int64_t n) {
    const std::int64_t first = state.frontier();
    std::int64_t second = first + 1;
    while (state.used(second)) ++second;

    // n in X means n = x(k), so x(n) = x(x(k)) is even and y(n) = y(x(k)) is
    // odd; n in Y flips both parities.
    const bool x_even = side_of_index(state, n) == Side::kX;
    auto fits = [&](std::int64_t xv, std::int64_t yv) {
      return (xv % 2 == 0) == x_even && (yv % 2 == 0) != x_even;
    };
    const bool direct = fits(first, second);
    const bool swapped = fits(second, first);
    if (direct == swapped) {
      throw ConstructionError("parity constraints do not select a unique order at n=" +
                              std::to_string(n));
    }
    if (direct) {
      state.append(first, second);
    } else {
      state.append(second, first);
    }
  });
}

SequencePair construct_offset(std::int64_t length, const StepObserver& observe) {
  require_length(length, kConstructionBudget, "construct_offset");
  return run_construction(length, observe, [](ConstructionState& state, std::int64_t n) {
    // For n in X, y(n) = x(n) + 1; the smaller value must be the frontier or
    // it would never be covered.
    const std::int64_t low = state.frontier();
    if (side_of_index(state, n) == Side::kX) {
      state.append(low, low + 1);
    } else {
      state.append(low + 1, low);
    }
  });
}

namespace {

class PartitionSearch {
 public:
  explicit PartitionSearch(std::int64_t length) : length_(length) {
    // With |x(n) - y(n)| = 1 and no uncovered gaps, a prefix of length L
    // uses exactly the values [0, 2L), so 2*length bounds every candidate.
    window_ = 2 * length;
    used_.assign(static_cast<std::size_t>(window_) + 1, false);
  }

  std::vector<SequencePair> run() {
    extend();
    std::sort(solutions_.begin(), solutions_.end());
    return std::move(solutions_);
  }

 private:
  void extend() {
    const auto level = static_cast<std::int64_t>(x_.size());
    if (level == length_) {
      solutions_.push_back({x_, y_});
      return;
    }
    const std::int64_t x_floor = x_.empty() ? 0 : x_.back() + 1;
    const std::int64_t y_floor = y_.empty() ? 0 : y_.back() + 1;
    for (std::int64_t xv = x_floor; xv <= window_; ++xv) {
      if (used_[static_cast<std::size_t>(xv)]) continue;
      for (std::int64_t yv = y_floor; yv <= window_; ++yv) {
        if (yv == xv || used_[static_cast<std::size_t>(yv)]) continue;
        push(xv, yv);
        if (consistent()) extend();
        pop();
      }
    }
  }

  void push(std::int64_t xv, std::int64_t yv) {
    x_.push_back(xv);
    y_.push_back(yv);
    used_[static_cast<std::size_t>(xv)] = true;
    used_[static_cast<std::size_t>(yv)] = true;
  }

  void pop() {
    used_[static_cast<std::size_t>(x_.back())] = false;
    used_[static_cast<std::size_t>(y_.back())] = false;
    x_.pop_back();
    y_.pop_back();
  }

  // Checks every relation instance that touches only indices in the prefix.
  [[nodiscard]] bool consistent() const {
    const auto len = static_cast<std::int64_t>(x_.size());
    // Both sequences are increasing, so an unused value below both last
    // terms can never be covered.
    const std::int64_t low = std::min(x_.back(), y_.back());
    for (std::int64_t v = 0; v < low; ++v) {
      if (!used_[static_cast<std::size_t>(v)]) return false;
    }
    for (std::int64_t k = 0; k < len; ++k) {
      const auto xk = x_[static_cast<std::size_t>(k)];
      const auto yk = y_[static_cast<std::size_t>(k)];
      if (xk - yk != 1 && yk - xk != 1) return false;
      if (xk < len && x_[static_cast<std::size_t>(xk)] != 2 * xk) return false;
      if (yk < len && y_[static_cast<std::size_t>(yk)] != 2 * yk) return false;
    }
    return true;
  }

  std::int64_t length_;
  std::int64_t window_ = 0;
  std::vector<std::int64_t> x_;
  std::vector<std::int64_t> y_;
  std::vector<bool> used_;
  std::vector<SequencePair> solutions_;
};

using RelationCheck = std::optional<std::string> (*)(std::int64_t);

std::optional<std::string> expect_equal(std::int64_t lhs, std::int64_t rhs) {
  if (lhs == rhs) return std::nullopt;
  return "lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
}

std::int64_t tm(std::int64_t n) { return thue_morse(n, Radix(kBinary)); }

struct Relation {
  const char* name;
  RelationCheck check;
};

const std::array<Relation, 8> kRelations = {{
    {"(i) a(a(n)) = 2a(n)", [](std::int64_t n) { return expect_equal(odious(odious(n)), 2 * odious(n)); }},
    {"(ii) b(b(n)) = 2b(n)", [](std::int64_t n) { return expect_equal(evil(evil(n)), 2 * evil(n)); }},
    {"(iii) a(b(n)) = 2b(n) + 1",
     [](std::int64_t n) { return expect_equal(odious(evil(n)), 2 * evil(n) + 1); }},
    {"(iv) b(a(n)) = 2a(n) + 1",
     [](std::int64_t n) { return expect_equal(evil(odious(n)), 2 * odious(n) + 1); }},
    {"(v) a(a(n)) = b(a(n)) - 1",
     [](std::int64_t n) { return expect_equal(odious(odious(n)), evil(odious(n)) - 1); }},
    {"(vi) b(b(n)) = a(b(n)) - 1",
     [](std::int64_t n) { return expect_equal(evil(evil(n)), odious(evil(n)) - 1); }},
    {"(vii) a(n) - b(n) = 1 - 2t(n)",
     [](std::int64_t n) { return expect_equal(odious(n) - evil(n), 1 - 2 * tm(n)); }},
    {"(viii) a(b(n)) - b(a(n)) = 4t(n) - 2",
     [](std::int64_t n) { return expect_equal(odious(evil(n)) - evil(odious(n)), 4 * tm(n) - 2); }},
}};

}  // namespace

std::vector<SequencePair> search_partition_solutions(std::int64_t length) {
  if (length < 1) throw DomainError("search length must be >= 1, got " + std::to_string(length));
  require_length(length, kSearchBudget, "search_partition_solutions");
  return PartitionSearch(length).run();
}

std::vector<VerificationReport> verify_relations(std::int64_t n_max, unsigned jobs) {
  if (n_max < 0) throw DomainError("n_max must be >= 0, got " + std::to_string(n_max));
  std::vector<VerificationReport> reports;
  reports.reserve(kRelations.size());
  for (const auto& rel : kRelations) {
    reports.push_back(sweep(rel.name, 0, n_max, jobs, rel.check));
  }
  return reports;
}

}  // namespace oddevil
