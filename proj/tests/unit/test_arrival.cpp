#include "acadpop/arrival.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_corpus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace acadpop {
namespace {

using testing::corpus_of;
using testing::idx;

std::set<std::string> names(const Corpus& c, const std::vector<AuthorIndex>& v) {
  std::set<std::string> out;
  for (auto a : v) out.insert(c.author(a).id);
  return out;
}

TEST(Newcomers, ToyCorpusSplit) {
  const auto c = corpus_of({1960, 1961}, {{"P1", 1960, {"A"}}, {"P2", 1961, {"A", "B"}}});
  const auto y60 = classify_newcomers(c, 1960);
  EXPECT_EQ(names(c, y60.immigrants), (std::set<std::string>{"A"}));
  EXPECT_TRUE(y60.mainstream.empty());
  const auto y61 = classify_newcomers(c, 1961);
  EXPECT_TRUE(y61.immigrants.empty());
  EXPECT_EQ(names(c, y61.mainstream), (std::set<std::string>{"B"}));
}

TEST(Newcomers, AnySeniorBearingPaperMakesMainstream) {
  const auto c = corpus_of({2000, 2001}, {{"P1", 2000, {"S"}}, {"P2", 2001, {"N"}}, {"P3", 2001, {"N", "S"}}});
  EXPECT_EQ(names(c, classify_newcomers(c, 2001).mainstream), (std::set<std::string>{"N"}));
}

TEST(Newcomers, HandFixtureClasses) {
  const auto c = testing::hand_fixture();
  EXPECT_EQ(names(c, classify_newcomers(c, 2000).immigrants), (std::set<std::string>{"A", "B", "C"}));
  EXPECT_EQ(names(c, classify_newcomers(c, 2001).mainstream), (std::set<std::string>{"D", "E", "F"}));
  EXPECT_EQ(names(c, classify_newcomers(c, 2004).immigrants), (std::set<std::string>{"J", "K"}));
  EXPECT_TRUE(classify_newcomers(c, 2004).mainstream.empty());
  EXPECT_TRUE(classify_newcomers(c, 2008).immigrants.empty());
}

TEST(Motifs, ClassificationTable) {
  EXPECT_EQ(classify_motif(0, 0), Motif::Solo);
  EXPECT_EQ(classify_motif(0, 3), Motif::NewcomersOnly);
  EXPECT_EQ(classify_motif(1, 2), Motif::MoreNewcomers);
  EXPECT_EQ(classify_motif(2, 2), Motif::NoFewerSeniors);
  EXPECT_EQ(classify_motif(3, 1), Motif::NoFewerSeniors);
  EXPECT_EQ(classify_motif(1, 0), Motif::OneSenior);
  EXPECT_EQ(classify_motif(2, 0), Motif::SeveralSeniors);
  EXPECT_EQ(motif_label(Motif::Solo), "i");
  EXPECT_EQ(motif_label(Motif::SeveralSeniors), "vi");
}

TEST(Motifs, EverySmallPairMatchesExactlyOneLiteralPredicate) {
  for (long a = 0; a < 30; ++a) {
    for (long b = 0; b < 30; ++b) {
      const auto m = oracle::literal_motif(a, b);
      ASSERT_EQ(m.matches, 1) << a << "," << b;
      EXPECT_EQ(static_cast<int>(classify_motif(static_cast<std::size_t>(a), static_cast<std::size_t>(b))), m.type);
    }
  }
}

TEST(Motifs, TwoSeniorsOneNewcomer) {
  const auto c = corpus_of({2000, 2001}, {{"P1", 2000, {"S1", "S2"}}, {"P2", 2001, {"X", "S1", "S2"}}});
  const auto m = motif_census(c, 2001);
  EXPECT_EQ(m.newcomer_papers, 1u);
  EXPECT_EQ(m[Motif::SeveralSeniors], 1u);
}

TEST(Motifs, HandFixtureCensus) {
  const auto c = testing::hand_fixture();
  const auto y2000 = motif_census(c, 2000);
  EXPECT_EQ(y2000[Motif::Solo], 1u);
  EXPECT_EQ(y2000[Motif::NewcomersOnly], 1u);
  const auto y2001 = motif_census(c, 2001);
  EXPECT_EQ(y2001.newcomer_papers, 2u);
  EXPECT_EQ(y2001[Motif::OneSenior], 1u);
  EXPECT_EQ(y2001[Motif::NoFewerSeniors], 1u);
  EXPECT_EQ(motif_census(c, 2003)[Motif::NoFewerSeniors], 1u);
  EXPECT_EQ(motif_census(c, 2003)[Motif::OneSenior], 1u);
  EXPECT_EQ(motif_census(c, 2004)[Motif::NewcomersOnly], 1u);
  EXPECT_EQ(motif_census(c, 2005)[Motif::OneSenior], 1u);
  EXPECT_DOUBLE_EQ(*y2001.fraction(Motif::OneSenior), 0.5);
  EXPECT_FALSE(motif_census(c, 2009).fraction(Motif::Solo).has_value());
}

TEST(Coauthors, Examples) {
  const auto toy = corpus_of({1960, 1961}, {{"P1", 1960, {"A"}}, {"P2", 1961, {"A", "B"}}});
  const auto s = coauthor_stats(toy, 1961);
  EXPECT_DOUBLE_EQ(*s.newcomers, 1.0);
  EXPECT_DOUBLE_EQ(*s.seniors, 1.0);
  EXPECT_DOUBLE_EQ(*s.mainstream, 1.0);
  EXPECT_FALSE(s.immigrants.has_value());
  EXPECT_DOUBLE_EQ(*coauthor_stats(toy, 1960).active, 0.0);

  const auto two = corpus_of({2000, 2000}, {{"P1", 2000, {"A", "B"}}, {"P2", 2000, {"A", "C"}}, {"P3", 2000, {"A", "B"}}});
  const auto d = coauthor_stats(two, 2000, CoauthorCounting::DistinctPerYear);
  EXPECT_DOUBLE_EQ(*d.active, (2.0 + 1 + 1) / 3);
  const auto p = coauthor_stats(two, 2000, CoauthorCounting::PerPaperSum);
  EXPECT_DOUBLE_EQ(*p.active, (3.0 + 2 + 1) / 3);
  EXPECT_DOUBLE_EQ(*d.newcomer_newcomer_coauthors, (2.0 + 1 + 1) / 3);
}

TEST(ArrivalProperties, RandomCorpora) {
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    const testing::RandomCorpusSpec spec;
    const auto papers = testing::random_papers(seed, spec);
    const auto c = testing::build_corpus(papers, spec.window);
    for (int y = spec.window.start; y <= spec.window.end; ++y) {
      const auto cls = classify_newcomers(c, y);
      std::vector<AuthorIndex> both = cls.immigrants;
      both.insert(both.end(), cls.mainstream.begin(), cls.mainstream.end());
      std::sort(both.begin(), both.end());
      std::vector<AuthorIndex> expected(c.newcomers_in(y).begin(), c.newcomers_in(y).end());
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(both, expected);
      EXPECT_TRUE(std::adjacent_find(both.begin(), both.end()) == both.end());

      // Immigrants have no senior coauthor on any arrival-year paper.
      for (auto i : cls.immigrants) {
        for (auto p : c.papers_in(y)) {
          const auto view = c.paper(p);
          if (std::find(view.authors.begin(), view.authors.end(), i) == view.authors.end()) continue;
          for (auto a : view.authors) EXPECT_EQ(c.author(a).arrival_year, y);
        }
      }

      const auto census = motif_census(c, y);
      const auto ref = oracle::motif_census(papers, y);
      EXPECT_TRUE(ref.every_paper_unique);
      EXPECT_EQ(static_cast<long>(census.newcomer_papers), ref.newcomer_papers);
      std::size_t sum = 0;
      for (std::size_t k = 0; k < kMotifCount; ++k) {
        EXPECT_EQ(static_cast<long>(census.counts[k]), ref.counts[k]) << "seed " << seed << " year " << y;
        sum += census.counts[k];
      }
      EXPECT_EQ(sum, census.newcomer_papers);

      const auto co = coauthor_stats(c, y);
      if (co.newcomers) EXPECT_GE(*co.newcomers + 1e-12, *co.newcomer_newcomer_coauthors);
      const auto per = coauthor_stats(c, y, CoauthorCounting::PerPaperSum);
      if (co.active) EXPECT_GE(*per.active + 1e-12, *co.active);
    }
  }
}

TEST(ArrivalReport, CoversWindow) {
  const auto c = testing::hand_fixture();
  const auto rows = arrival_report(c);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0].year, 2000);
  EXPECT_DOUBLE_EQ(*rows[0].immigrant_fraction, 1.0);
  EXPECT_DOUBLE_EQ(*rows[1].immigrant_fraction, 0.0);
  EXPECT_FALSE(rows[9].immigrant_fraction.has_value());
}

}  // namespace
}  // namespace acadpop
