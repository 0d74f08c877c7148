#include "acadpop/corpus.hpp"

#include "bench_common.hpp"

#include <benchmark/benchmark.h>

#include <sstream>

namespace {

void BM_IngestJsonl(benchmark::State& state) {
  const auto corpus = acadpop::bench::synthetic_corpus(static_cast<int>(state.range(0)), 200);
  std::ostringstream text;
  acadpop::write_jsonl(corpus, text);
  const std::string data = text.str();
  for (auto _ : state) {
    std::istringstream in(data);
    auto r = acadpop::ingest_jsonl(in, corpus.window());
    benchmark::DoNotOptimize(r.corpus.author_count());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * data.size()));
  state.counters["papers"] = static_cast<double>(corpus.paper_count());
}
BENCHMARK(BM_IngestJsonl)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_IngestDblpXml(benchmark::State& state) {
  std::ostringstream xml;
  xml << "<?xml version=\"1.0\"?>\n<dblp>\n";
  for (int i = 0; i < state.range(0); ++i) {
    xml << "<article key=\"journals/x/" << i << "\"><author>Author " << i % 997 << "</author><author>M&uuml;ller "
        << i % 313 << "</author><title>Paper <i>" << i << "</i></title><year>" << 1970 + i % 40
        << "</year></article>\n";
  }
  xml << "</dblp>\n";
  const std::string data = xml.str();
  for (auto _ : state) {
    std::istringstream in(data);
    auto r = acadpop::ingest_dblp_xml(in, {1960, 2009});
    benchmark::DoNotOptimize(r.corpus.paper_count());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * data.size()));
}
BENCHMARK(BM_IngestDblpXml)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
