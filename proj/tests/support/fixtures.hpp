#pragma once

#include "acadpop/corpus.hpp"

#include "test_paths.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace acadpop::testing {

/// The hand-checked 15-paper fixture over 2000..2009.
inline Corpus hand_fixture() {
  return ingest_jsonl(data_path("hand_fixture.jsonl"), {2000, 2009}).corpus;
}

inline Corpus corpus_of(YearWindow w, std::initializer_list<Paper> papers) {
  CorpusBuilder b(w);
  for (const auto& p : papers) b.add(p);
  return std::move(b).build();
}

inline AuthorIndex idx(const Corpus& c, const std::string& name) { return c.find_author(name).value(); }

}  // namespace acadpop::testing
