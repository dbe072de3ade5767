#include <vector>

#include <gtest/gtest.h>

#include "oddevil/oracle.hpp"
#include "oddevil/sequences.hpp"
#include "oddevil/shevelev.hpp"
#include "oddevil/summation.hpp"

using namespace oddevil;

TEST(CompareMod4, Examples) {
  EXPECT_EQ(compare_mod4(17, 6), Mod4Ordering::kLess);
  EXPECT_EQ(compare_mod4(42, 42), Mod4Ordering::kEqual);
  EXPECT_EQ(compare_mod4(7, 2), Mod4Ordering::kGreater);
  EXPECT_EQ(compare_mod4(-1, 2), Mod4Ordering::kGreater);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_shevelev(2), ShevelevCase::kI);
  EXPECT_EQ(classify_shevelev(5), ShevelevCase::kIII);
  EXPECT_EQ(classify_shevelev(3), ShevelevCase::kNone);
  EXPECT_EQ(classify_shevelev(6), ShevelevCase::kII);
  EXPECT_EQ(classify_shevelev(7), ShevelevCase::kIV);
  EXPECT_THROW((void)classify_shevelev(1), DomainError);
}

TEST(Rhs, Examples) {
  EXPECT_EQ(shevelev_rhs(ShevelevCase::kI, 2), SumValue(7));
  EXPECT_EQ(shevelev_rhs(ShevelevCase::kIII, 5), SumValue(33));
  EXPECT_EQ(shevelev_rhs(ShevelevCase::kII, 6), SumValue(46));
  EXPECT_EQ(shevelev_rhs(ShevelevCase::kIV, 7), SumValue(60));
  EXPECT_EQ(odious_summatory(7), SumValue(60));
  EXPECT_THROW((void)shevelev_rhs(ShevelevCase::kNone, 3), DomainError);
}

TEST(Rhs, InexactDivisionOutsideHypothesis) {
  // n = 2 is case I; the case II numerator 4 * 7 + 2 = 30 is not divisible by 4.
  EXPECT_THROW((void)shevelev_rhs(ShevelevCase::kII, 2), InvariantViolation);
}

TEST(Lemma, Mod4OrderMirrorsThueMorse) {
  constexpr std::int64_t kMax = 10000;
  std::vector<std::int64_t> a(kMax + 1);
  std::vector<Letter> t(kMax + 1);
  for (std::int64_t n = 0; n <= kMax; ++n) {
    a[n] = odious(n);
    t[n] = oracle::thue_morse(n, Radix(2));
  }
  for (std::int64_t n = 0; n <= kMax; ++n) {
    for (std::int64_t m = n % 2; m <= kMax; m += 2) {
      const Mod4Ordering c = compare_mod4(a[n], a[m]);
      ASSERT_EQ(c == Mod4Ordering::kLess, t[m] < t[n]) << n << " " << m;
      ASSERT_EQ(c != Mod4Ordering::kGreater, t[m] <= t[n]) << n << " " << m;
    }
  }
}

TEST(Classify, CasesMatchThueMorsePatterns) {
  auto tm = [](std::int64_t n) { return oracle::thue_morse(n, Radix(2)); };
  for (std::int64_t n = 2; n <= 100000; ++n) {
    const auto c = classify_shevelev(n);
    const bool even = n % 2 == 0;
    const bool p1 = even && tm(n - 1) == 1 && tm(n) == 1 && tm(n + 1) == 0;
    const bool p2 = even && tm(n - 1) == 0 && tm(n) == 0 && tm(n + 1) == 1;
    const bool p3 = !even && tm(n - 1) == 1 && tm(n) == 0 && tm(n + 1) == 0 && tm(n + 2) == 1;
    const bool p4 = !even && tm(n - 1) == 0 && tm(n) == 1 && tm(n + 1) == 1 && tm(n + 2) == 0;
    ASSERT_EQ(c == ShevelevCase::kI, p1) << n;
    ASSERT_EQ(c == ShevelevCase::kII, p2) << n;
    ASSERT_EQ(c == ShevelevCase::kIII, p3) << n;
    ASSERT_EQ(c == ShevelevCase::kIV, p4) << n;
  }
}

TEST(Classify, HypothesesAreMutuallyExclusive) {
  for (std::int64_t n = 2; n <= 100000; ++n) {
    const auto h = shevelev_hypotheses(n);
    ASSERT_LE(h[0] + h[1] + h[2] + h[3], 1) << n;
  }
}

TEST(VerifyRange, Examples) {
  const auto one = verify_shevelev(2, 2);
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(one.count(ShevelevCase::kI), 1u);

  const auto seven = verify_shevelev(7, 7);
  EXPECT_TRUE(seven.passed());
  EXPECT_EQ(seven.count(ShevelevCase::kIV), 1u);

  const auto wide = verify_shevelev(2, 10000);
  EXPECT_TRUE(wide.passed());
  EXPECT_EQ(wide.report.checked, 9999u);

  EXPECT_THROW((void)verify_shevelev(1, 10), DomainError);
  EXPECT_THROW((void)verify_shevelev(10, 9), DomainError);
}

TEST(VerifyRange, ShardingDoesNotChangeCounts) {
  const auto serial = verify_shevelev(2, 50000, 1);
  for (unsigned jobs : {2u, 3u, 8u}) {
    const auto parallel = verify_shevelev(2, 50000, jobs);
    EXPECT_EQ(parallel.report, serial.report);
    EXPECT_EQ(parallel.case_counts, serial.case_counts);
  }
  std::uint64_t total = 0;
  for (auto c : serial.case_counts) total += c;
  EXPECT_EQ(total, 49999u);
}
