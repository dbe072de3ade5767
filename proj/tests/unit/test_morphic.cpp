#include <gtest/gtest.h>

#include "oddevil/digits.hpp"
#include "oddevil/morphic.hpp"
#include "oddevil/oracle.hpp"

using namespace oddevil;

TEST(MorphismImage, Examples) {
  EXPECT_EQ(morphism_image(0, Radix(2)), (Word{0, 1}));
  EXPECT_EQ(morphism_image(1, Radix(2)), (Word{1, 0}));
  EXPECT_EQ(morphism_image(2, Radix(3)), (Word{2, 0, 1}));
  EXPECT_THROW((void)morphism_image(3, Radix(3)), DomainError);
}

TEST(MorphismImage, CyclicShiftShape) {
  for (std::int64_t d = 2; d <= 9; ++d) {
    for (Letter c = 0; c < d; ++c) {
      const Word w = morphism_image(c, Radix(d));
      ASSERT_EQ(static_cast<std::int64_t>(w.size()), d);
      for (std::int64_t alpha = 0; alpha < d; ++alpha) {
        ASSERT_EQ(w[alpha], residue(c + alpha, Radix(d)));
      }
    }
  }
}

TEST(Prefix, Examples) {
  EXPECT_EQ(prefix(Radix(2), 8), (Word{0, 1, 1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(prefix(Radix(3), 9), (Word{0, 1, 2, 1, 2, 0, 2, 0, 1}));
  EXPECT_TRUE(prefix(Radix(5), 0).empty());
  EXPECT_EQ(prefix(Radix(7), 1), (Word{0}));
}

TEST(Prefix, ExactLengthForEveryLength) {
  for (std::int64_t d = 2; d <= 5; ++d) {
    const Word full = prefix(Radix(d), 500);
    for (std::int64_t len = 0; len <= 500; ++len) {
      const Word w = prefix(Radix(d), len);
      ASSERT_EQ(static_cast<std::int64_t>(w.size()), len);
      ASSERT_TRUE(std::equal(w.begin(), w.end(), full.begin()));
    }
  }
}

TEST(Prefix, BudgetAndDomain) {
  EXPECT_THROW((void)prefix(Radix(2), -1), DomainError);
  EXPECT_THROW((void)prefix(Radix(2), 1000, 100), ResourceError);
  EXPECT_NO_THROW((void)prefix(Radix(2), 25, 100));
  EXPECT_THROW((void)prefix(Radix(2), INT64_MAX), ResourceError);
}

TEST(Prefix, FixedPoint) {
  for (std::int64_t d = 2; d <= 6; ++d) {
    const std::int64_t m = 10000 / d;
    const Word small = prefix(Radix(d), m);
    Word expanded;
    for (Letter c : small) {
      const Word img = morphism_image(c, Radix(d));
      expanded.insert(expanded.end(), img.begin(), img.end());
    }
    EXPECT_EQ(expanded, prefix(Radix(d), d * m)) << "d=" << d;
  }
}

TEST(Prefix, MatchesDigitSums) {
  for (std::int64_t d = 2; d <= 8; ++d) {
    const Word w = prefix(Radix(d), 10000);
    for (std::size_t k = 0; k < w.size(); ++k) {
      ASSERT_EQ(w[k], oracle::thue_morse(static_cast<std::int64_t>(k), Radix(d)));
    }
  }
}

TEST(Prefix, BinaryWordHasNoCubeOfLetters) {
  const Word w = prefix(Radix(2), 10000);
  for (std::size_t k = 0; k + 2 < w.size(); ++k) {
    ASSERT_FALSE(w[k] == w[k + 1] && w[k + 1] == w[k + 2]) << "at " << k;
  }
}

TEST(Stream, Examples) {
  LetterStream s = stream(Radix(2));
  EXPECT_EQ(s.next(), 0u);
  EXPECT_EQ(s.next(), 1u);
  EXPECT_EQ(s.next(), 1u);
  EXPECT_EQ(s.next(), 0u);
  EXPECT_EQ(s.cursor(), 4);

  LetterStream t = stream(Radix(3));
  for (int k = 0; k < 6; ++k) (void)t.next();
  Word block{t.next(), t.next(), t.next()};
  EXPECT_EQ(block, morphism_image(2, Radix(3)));
}

TEST(Stream, MatchesPrefixAcrossManyLevels) {
  for (std::int64_t d = 2; d <= 8; ++d) {
    const Word w = prefix(Radix(d), 200000);
    LetterStream s{Radix(d)};
    for (std::size_t k = 0; k < w.size(); ++k) {
      ASSERT_EQ(s.next(), w[k]) << "d=" << d << " k=" << k;
    }
  }
}

TEST(Stream, SurvivesMove) {
  LetterStream a(Radix(3));
  for (int k = 0; k < 100; ++k) (void)a.next();
  LetterStream b = std::move(a);
  EXPECT_EQ(b.cursor(), 100);
  EXPECT_EQ(b.next(), thue_morse(100, Radix(3)));
}
