#include "acadpop/productivity.hpp"

#include "fixtures.hpp"
#include "random_corpus.hpp"

#include <gtest/gtest.h>

namespace acadpop {
namespace {

using testing::corpus_of;

TEST(Productivity, IpAndCpExamples) {
  const auto c = corpus_of({2000, 2001}, {{"P1", 2000, {"A", "B"}}, {"P2", 2000, {"A"}}});
  EXPECT_DOUBLE_EQ(*ip(c, 2000), 1.5);
  EXPECT_DOUBLE_EQ(*cp(c, 2000), 1.0);
  EXPECT_FALSE(ip(c, 2001).has_value());
  EXPECT_FALSE(cp(c, 2001).has_value());

  const auto one = corpus_of({2000, 2000}, {{"P1", 2000, {"A"}}});
  EXPECT_DOUBLE_EQ(*ip(one, 2000), 1.0);

  const auto three = corpus_of({2000, 2000}, {{"P1", 2000, {"A", "B"}}, {"P2", 2000, {"B", "C"}}});
  EXPECT_DOUBLE_EQ(*cp(three, 2000), 2.0 / 3);
  EXPECT_DOUBLE_EQ(*fractional_ip(corpus_of({2000, 2000}, {{"P1", 2000, {"A", "B"}}}), 2000), 0.5);
  EXPECT_DOUBLE_EQ(*authors_per_paper(corpus_of({2000, 2000}, {{"P1", 2000, {"A"}}, {"P2", 2000, {"A", "B", "C"}}}), 2000),
                   2.0);
}

TEST(Productivity, HandFixture) {
  const auto c = testing::hand_fixture();
  const double ips[] = {1, 1.2, 1, 1.2, 1, 1};
  const double cps[] = {2.0 / 3, 0.6, 0.6, 0.6, 2.0 / 3, 0.5};
  for (int i = 0; i < 6; ++i) {
    EXPECT_DOUBLE_EQ(*ip(c, 2000 + i), ips[i]) << 2000 + i;
    EXPECT_DOUBLE_EQ(*cp(c, 2000 + i), cps[i]) << 2000 + i;
  }
  EXPECT_DOUBLE_EQ(*authors_per_paper(c, 2001), 2.0);
  EXPECT_DOUBLE_EQ(*fractional_ip(c, 2001), 0.6);
  EXPECT_DOUBLE_EQ(*ip(c, 2003, Cohort::Transient), 1.5);
  EXPECT_DOUBLE_EQ(*cp(c, 2003, Cohort::Transient), 1.0);
  EXPECT_DOUBLE_EQ(*ip(c, 2003, Cohort::Newcomer), 1.5);
  EXPECT_FALSE(ip(c, 2003, Cohort::Career).has_value());
  EXPECT_DOUBLE_EQ(*ip(c, 2005, Cohort::Career, {6}), 1.0);
}

TEST(Productivity, SoloOnlyMakesIpEqualCp) {
  const auto c = corpus_of({2000, 2000}, {{"P1", 2000, {"A"}}, {"P2", 2000, {"A"}}, {"P3", 2000, {"B"}}});
  EXPECT_DOUBLE_EQ(*ip(c, 2000), *cp(c, 2000));
}

TEST(Productivity, IdentitiesOnRandomCorpora) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto c = testing::random_corpus(seed);
    for (const auto& r : productivity_report(c)) {
      if (!r.ip_all) continue;
      const auto active = c.active_in(r.year).size();
      std::size_t slots = 0;
      bool all_solo = true;
      for (auto p : c.papers_in(r.year)) {
        slots += c.paper(p).authors.size();
        all_solo = all_solo && c.paper(p).authors.size() == 1;
      }
      EXPECT_NEAR(*r.ip_all * static_cast<double>(active), static_cast<double>(slots), 1e-9);
      EXPECT_NEAR(*fractional_ip(c, r.year), *r.cp_all, 1e-12);
      EXPECT_GE(*r.ip_all + 1e-12, *r.cp_all);
      if (!all_solo) EXPECT_GT(*r.ip_all, *r.cp_all);
      EXPECT_NEAR(*r.cp_all * static_cast<double>(active), static_cast<double>(c.publications_in(r.year)), 1e-9);
    }
  }
}

TEST(Productivity, CohortMembership) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto c = testing::random_corpus(seed);
    for (int y = 2000; y <= 2007; ++y) {
      std::size_t transient = 0, newcomers = 0, papers_t = 0;
      for (auto a : c.active_in(y)) {
        const auto& rec = c.author(a);
        if (rec.active_year_count() == 1) {
          ++transient;
          papers_t += static_cast<std::size_t>(rec.papers_in(y));
        }
        newcomers += rec.arrival_year == y;
      }
      EXPECT_EQ(ip(c, y, Cohort::Transient).has_value(), transient > 0);
      if (transient) EXPECT_DOUBLE_EQ(*ip(c, y, Cohort::Transient), double(papers_t) / double(transient));
      EXPECT_EQ(ip(c, y, Cohort::Newcomer).has_value(), newcomers > 0);
    }
  }
}

}  // namespace
}  // namespace acadpop
