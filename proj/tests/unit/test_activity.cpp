#include "acadpop/activity.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_corpus.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace acadpop {
namespace {

using testing::corpus_of;

const ActivityRow& row(const std::vector<ActivityRow>& rows, int year) {
  for (const auto& r : rows) {
    if (r.year == year) return r;
  }
  throw std::out_of_range("year");
}

TEST(Activity, GapInsideWindowIsAliveButInactive) {
  const auto c = corpus_of({1990, 2000}, {{"P1", 1990, {"A"}}, {"P2", 1992, {"A"}}});
  for (const auto& policy : {AlivePolicy::strict(), AlivePolicy::windowed(5)}) {
    const auto rows = activity_rate(c, policy);
    EXPECT_EQ(row(rows, 1991).alive, 1u);
    EXPECT_EQ(row(rows, 1991).active, 0u);
    EXPECT_DOUBLE_EQ(*row(rows, 1991).rate, 0.0);
    EXPECT_FALSE(row(rows, 1995).rate.has_value());
  }
}

TEST(Activity, WindowedPolicyDropsLongGaps) {
  const auto c = corpus_of({1990, 2000}, {{"P1", 1990, {"A"}}, {"P2", 1999, {"A"}}});
  const auto rows = activity_rate(c, AlivePolicy::windowed(5));
  for (int y = 1991; y <= 1993; ++y) EXPECT_EQ(row(rows, y).alive, 0u) << y;
  for (int y = 1994; y <= 1999; ++y) EXPECT_EQ(row(rows, y).alive, 1u) << y;
  EXPECT_EQ(row(activity_rate(c, AlivePolicy::strict()), 1991).alive, 1u);
}

TEST(Activity, InteriorRateSkipsFirstAndLastYears) {
  const auto c = corpus_of({2000, 2005}, {{"P1", 2000, {"A", "B"}}, {"P2", 2002, {"A"}}, {"P3", 2003, {"A"}}});
  const auto rows = interior_activity_rate(c);
  EXPECT_FALSE(row(rows, 2000).rate.has_value());
  EXPECT_DOUBLE_EQ(*row(rows, 2001).rate, 0.0);
  EXPECT_DOUBLE_EQ(*row(rows, 2002).rate, 1.0);
  EXPECT_FALSE(row(rows, 2003).rate.has_value());
}

TEST(Activity, PoliciesAgainstOracleOnRandomCorpora) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const testing::RandomCorpusSpec spec{{2000, 2015}, 80, 40, 3};
    const auto papers = testing::random_papers(seed, spec);
    const auto c = testing::build_corpus(papers, spec.window);
    const auto strict = activity_rate(c, AlivePolicy::strict());
    const auto windowed = activity_rate(c, AlivePolicy::windowed(3));
    for (std::size_t i = 0; i < strict.size(); ++i) {
      EXPECT_EQ(static_cast<long>(strict[i].alive), oracle::alive_strict(papers, strict[i].year));
      EXPECT_LE(windowed[i].alive, strict[i].alive);
      EXPECT_EQ(windowed[i].active, strict[i].active);
      EXPECT_LE(strict[i].active, strict[i].alive);
      if (strict[i].rate && windowed[i].rate) EXPECT_GE(*windowed[i].rate, *strict[i].rate);
    }
  }
}

TEST(Cap, HandFixture) {
  const auto c = testing::hand_fixture();
  EXPECT_DOUBLE_EQ(*cap_n(c, 2000, 1).value, 2.0 / 3);
  EXPECT_EQ(cap_n(c, 2000, 1).support, 3u);
  EXPECT_DOUBLE_EQ(*cap_n(c, 2001, 1).value, 0.75);
  EXPECT_DOUBLE_EQ(*cap_n(c, 2002, 1).value, 2.0 / 3);
  EXPECT_DOUBLE_EQ(*cap_n(c, 2003, 1).value, 0.5);
  EXPECT_DOUBLE_EQ(*cap_n(c, 2004, 1).value, 1.0);
  EXPECT_DOUBLE_EQ(*cap_n(c, 2000, 2).value, 1.0);
  EXPECT_FALSE(cap_n(c, 2006, 1).value.has_value());
  EXPECT_THROW(cap_n(c, 2000, 0), std::invalid_argument);
  EXPECT_THROW(cap_n(c, 2009, 1), std::invalid_argument);
}

TEST(Cap, GapAtTargetYearCountsInDenominatorOnly) {
  const auto c = corpus_of({2000, 2010}, {{"P1", 2000, {"A"}}, {"P2", 2001, {"A"}}, {"P3", 2003, {"A"}}});
  const auto e = cap_n(c, 2000, 2);
  EXPECT_EQ(e.support, 1u);
  EXPECT_EQ(e.numerator, 0u);
  EXPECT_DOUBLE_EQ(*e.value, 0.0);
}

TEST(Cap, DenominatorNonIncreasingInN) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto c = testing::random_corpus(seed, {{2000, 2015}, 150, 30, 3});
    for (int t = 2000; t < 2015; ++t) {
      std::size_t prev = SIZE_MAX;
      for (int n = 1; t + n <= 2015; ++n) {
        const auto e = cap_n(c, t, n);
        EXPECT_LE(e.support, prev);
        EXPECT_LE(e.numerator, e.support);
        prev = e.support;
      }
    }
    for (const auto& cell : cap_grid(c, 5)) {
      EXPECT_LE(cell.n, 5);
      EXPECT_TRUE(cell.estimate.value.has_value());
    }
  }
}

}  // namespace
}  // namespace acadpop
