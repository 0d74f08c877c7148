#pragma once

#include "acadpop/corpus.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace acadpop::testing {

struct RandomCorpusSpec {
  YearWindow window{2000, 2007};
  int papers = 60;
  int author_pool = 25;
  int max_authors = 5;
};

/// Papers with random years and random author subsets drawn from a fixed pool.
inline std::vector<Paper> random_papers(std::uint64_t seed, const RandomCorpusSpec& spec = {}) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> year(spec.window.start, spec.window.end);
  std::uniform_int_distribution<int> size(1, spec.max_authors);
  std::vector<std::string> pool;
  for (int i = 0; i < spec.author_pool; ++i) pool.push_back("a" + std::to_string(i));

  std::vector<Paper> papers;
  for (int p = 0; p < spec.papers; ++p) {
    Paper paper{"p" + std::to_string(p), year(rng), {}};
    auto shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    paper.authors.assign(shuffled.begin(), shuffled.begin() + size(rng));
    papers.push_back(std::move(paper));
  }
  return papers;
}

inline Corpus build_corpus(const std::vector<Paper>& papers, YearWindow window) {
  CorpusBuilder builder(window);
  for (const auto& p : papers) builder.add(p);
  return std::move(builder).build();
}

inline Corpus random_corpus(std::uint64_t seed, const RandomCorpusSpec& spec = {}) {
  return build_corpus(random_papers(seed, spec), spec.window);
}

}  // namespace acadpop::testing
