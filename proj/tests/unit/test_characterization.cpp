#include <gtest/gtest.h>

#include "oddevil/characterization.hpp"
#include "oddevil/oracle.hpp"

using namespace oddevil;

namespace {

using Prefix = std::vector<std::int64_t>;

SequencePair odious_evil(std::int64_t n) {
  return {oracle::terms(SequenceSpec::odious(), n), oracle::terms(SequenceSpec::evil(), n)};
}

}  // namespace

TEST(ConstructionState, RejectsBrokenAppends) {
  ConstructionState s;
  s.append(1, 0);
  EXPECT_THROW(s.append(1, 2), ConstructionError);  // reuse
  EXPECT_THROW(s.append(3, 3), ConstructionError);  // shared value
  EXPECT_THROW(s.append(0, 2), ConstructionError);  // reuse
  EXPECT_THROW(s.append(2, -1), ConstructionError);
  s.append(2, 3);
  EXPECT_THROW(s.append(5, 2), ConstructionError);  // y not increasing (and reused)
  EXPECT_EQ(s.frontier(), 4);
  EXPECT_EQ(s.side_of(2), Side::kX);
  EXPECT_EQ(s.side_of(3), Side::kY);
  EXPECT_FALSE(s.side_of(4).has_value());
  EXPECT_TRUE(s.invariants_hold());
}

TEST(ConstructionState, GapsLeaveFrontierInPlace) {
  ConstructionState s;
  s.append(1, 3);
  EXPECT_EQ(s.frontier(), 0);
  EXPECT_TRUE(s.invariants_hold());
}

TEST(ConstructParity, Examples) {
  EXPECT_EQ(construct_parity(4), (SequencePair{{1, 2, 4, 7}, {0, 3, 5, 6}}));
  EXPECT_EQ(construct_parity(1), (SequencePair{{1}, {0}}));
  EXPECT_EQ(construct_parity(0), (SequencePair{}));
  EXPECT_THROW((void)construct_parity(-1), DomainError);
  EXPECT_THROW((void)construct_parity(kConstructionBudget + 1), ResourceError);
}

TEST(ConstructOffset, Examples) {
  EXPECT_EQ(construct_offset(4), (SequencePair{{1, 2, 4, 7}, {0, 3, 5, 6}}));
  EXPECT_EQ(construct_offset(2), (SequencePair{{1, 2}, {0, 3}}));
  EXPECT_EQ(construct_offset(0), (SequencePair{}));
}

TEST(Constructors, MatchOdiousAndEvil) {
  const auto expected = odious_evil(100000);
  EXPECT_EQ(construct_parity(100000), expected);
  EXPECT_EQ(construct_offset(100000), expected);
}

TEST(Constructors, EveryIntermediateStateIsValid) {
  std::int64_t steps = 0;
  auto observe = [&](const ConstructionState& s) {
    ++steps;
    ASSERT_TRUE(s.invariants_hold());
    // No value below the frontier is skipped and the frontier is 2n after n steps.
    ASSERT_EQ(s.frontier(), 2 * static_cast<std::int64_t>(s.length()));
  };
  (void)construct_parity(3000, observe);
  (void)construct_offset(3000, observe);
  EXPECT_EQ(steps, 6000);
}

TEST(Search, Examples) {
  const auto one = search_partition_solutions(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0], (SequencePair{{0}, {1}}));
  EXPECT_EQ(one[1], (SequencePair{{1}, {0}}));

  const auto eight = search_partition_solutions(8);
  ASSERT_EQ(eight.size(), 2u);
  EXPECT_EQ(eight[0].x, eight[1].y);
  EXPECT_EQ(eight[0].y, eight[1].x);
  EXPECT_EQ(eight[1], odious_evil(8));

  EXPECT_THROW((void)search_partition_solutions(0), DomainError);
  EXPECT_THROW((void)search_partition_solutions(kSearchBudget + 1), ResourceError);
}

TEST(Search, UniqueUpToSwapWithPairedValues) {
  for (std::int64_t n = 1; n <= 16; ++n) {
    const auto sols = search_partition_solutions(n);
    ASSERT_EQ(sols.size(), 2u) << "N=" << n;
    EXPECT_EQ(sols[0].x, sols[1].y);
    EXPECT_EQ(sols[0].y, sols[1].x);
    for (const auto& s : sols) {
      for (std::int64_t k = 0; k < n / 2; ++k) {
        const auto lo = std::min(s.x[k], s.y[k]);
        const auto hi = std::max(s.x[k], s.y[k]);
        ASSERT_EQ(lo, 2 * k);
        ASSERT_EQ(hi, 2 * k + 1);
      }
    }
  }
}

TEST(Search, DifferenceIsSignedThueMorse) {
  for (std::int64_t n = 1; n <= 16; ++n) {
    for (const auto& s : search_partition_solutions(n)) {
      const std::int64_t sign = s.x[0] - s.y[0];  // +1 for (a, b), -1 for (b, a)
      for (std::int64_t k = 0; k < n; ++k) {
        const std::int64_t t = oracle::thue_morse(k, Radix(2));
        ASSERT_EQ(s.x[k] - s.y[k], sign * (1 - 2 * t)) << "N=" << n << " k=" << k;
      }
    }
  }
}

TEST(Search, DefectSequenceSatisfiesThueMorseRecurrence) {
  for (std::int64_t n = 1; n <= 16; ++n) {
    for (const auto& s : search_partition_solutions(n)) {
      const Prefix& x = s.x[0] == 1 ? s.x : s.y;  // orient so x(0) = 1
      auto alpha = [&](std::int64_t k) { return 2 * k + 1 - x[k]; };
      ASSERT_EQ(alpha(0), 0);
      for (std::int64_t m = 0; 2 * m + 1 < n; ++m) {
        ASSERT_EQ(alpha(2 * m), alpha(m));
        ASSERT_EQ(alpha(2 * m + 1), 1 - alpha(m));
      }
    }
  }
}

TEST(Search, LargestBudgetStillTwo) {
  EXPECT_EQ(search_partition_solutions(kSearchBudget).size(), 2u);
}

TEST(Relations, Examples) {
  const auto reps = verify_relations(2);
  ASSERT_EQ(reps.size(), 8u);
  for (const auto& r : reps) EXPECT_TRUE(r.passed()) << r.identity;
  EXPECT_EQ(reps[0].identity, "(i) a(a(n)) = 2a(n)");
}

TEST(Relations, HoldOnLargeRange) {
  for (const auto& r : verify_relations(100000, 4)) {
    EXPECT_TRUE(r.passed()) << r.identity;
    EXPECT_EQ(r.checked, 100001u);
  }
}
