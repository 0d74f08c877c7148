#include "acadpop_cli/cli.hpp"
#include "acadpop_cli/manifest.hpp"

#include "acadpop/activity.hpp"
#include "acadpop/arrival.hpp"
#include "acadpop/corpus.hpp"
#include "acadpop/error.hpp"
#include "acadpop/lifecycle.hpp"
#include "acadpop/productivity.hpp"
#include "acadpop/reproduction.hpp"
#include "acadpop/round_trip.hpp"
#include "acadpop/simulator.hpp"
#include "acadpop/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>

namespace acadpop::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kCorpusFile = "corpus.jsonl";
constexpr const char* kCorpusMeta = "corpus.json";

const std::vector<std::string> kSections = {"arrival", "lifecycle", "activity", "productivity", "reproduction"};

/// Usage problems detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusCache {
  Corpus corpus;
  fs::path jsonl;
};

void write_corpus_cache(RunManifest& manifest, const Corpus& corpus, const IngestReport& report, const json& source) {
  manifest.write(kCorpusFile, [&](std::ostream& out) { write_jsonl(corpus, out); });
  manifest.write_json(kCorpusMeta, {{"window", {corpus.window().start, corpus.window().end}},
                                    {"papers", corpus.paper_count()},
                                    {"authors", corpus.author_count()},
                                    {"ingest", to_json(report)},
                                    {"source", source}});
}

CorpusCache load_cache(const fs::path& dir) {
  const auto meta_path = dir / kCorpusMeta;
  std::ifstream meta_in(meta_path);
  if (!meta_in) throw IngestError("no corpus cache at " + dir.string() + " (run `acadpop ingest` first)");
  json meta;
  try {
    meta = json::parse(meta_in);
  } catch (const json::exception& e) {
    throw IngestError("corrupt cache metadata " + meta_path.string() + ": " + e.what());
  }
  const YearWindow window{meta.at("window").at(0).get<int>(), meta.at("window").at(1).get<int>()};
  auto result = ingest_jsonl(dir / kCorpusFile, window);
  return {std::move(result.corpus), dir / kCorpusFile};
}

json summary_json(const Corpus& corpus, const IngestReport& report) {
  return {{"papers", corpus.paper_count()},
          {"authors", corpus.author_count()},
          {"window", {corpus.window().start, corpus.window().end}},
          {"ingest", to_json(report)}};
}

// --- ingest -----------------------------------------------------------------

struct IngestArgs {
  std::string input;
  std::string format = "jsonl";
  std::string window = "1960:2009";
  std::string out;
};

int cmd_ingest(const IngestArgs& args, std::ostream& out, std::ostream& err) {
  const auto window = YearWindow::parse(args.window);
  const fs::path input(args.input);
  if (!fs::exists(input)) throw IngestError("input file not found: " + input.string());

  IngestResult result = args.format == "jsonl" ? ingest_jsonl(input, window) : ingest_dblp_xml(input, window);

  RunManifest manifest("ingest", args.out);
  manifest.add_input(input);
  manifest.set_flag("format", args.format);
  manifest.set_window(window.start, window.end);
  write_corpus_cache(manifest, result.corpus, result.report,
                     {{"format", args.format}, {"path", input.filename().string()}});
  manifest.commit();

  err << result.corpus.paper_count() << " papers, " << result.corpus.author_count() << " authors\n";
  out << summary_json(result.corpus, result.report).dump() << '\n';
  return kOk;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string cache;
  std::string out;
  std::vector<std::string> sections{"all"};
  std::string alive_policy = "windowed:5";
  int censor_guard = 5;
  int fit_horizon = 20;
  std::size_t min_tail_samples = 1;
  std::string credit_mode = "drop";
  std::string coauthor_counting = "distinct";
  std::string reproduction_alive = "strict";
  int cap_max_n = 10;
  std::vector<int> ccdf_cohorts;
  std::vector<std::string> cdf_cells;
};

std::set<std::string> resolve_sections(const std::vector<std::string>& requested) {
  std::set<std::string> out;
  for (const auto& raw : requested) {
    std::stringstream ss(raw);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name == "all") {
        out.insert(kSections.begin(), kSections.end());
      } else if (std::find(kSections.begin(), kSections.end(), name) != kSections.end()) {
        out.insert(name);
      } else {
        std::string valid = "all";
        for (const auto& s : kSections) valid += ", " + s;
        throw UsageError("unknown section '" + name + "' (valid: " + valid + ")");
      }
    }
  }
  return out;
}

CreditMode parse_credit_mode(const std::string& s) {
  if (s == "drop") return CreditMode::DropSeniorless;
  if (s == "renormalize") return CreditMode::Renormalize;
  throw UsageError("unknown credit mode '" + s + "' (expected drop or renormalize)");
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream&) {
  const auto sections = resolve_sections(args.sections);
  const auto alive = AlivePolicy::parse(args.alive_policy);
  const auto repro_alive = AlivePolicy::parse(args.reproduction_alive);
  const auto credit = parse_credit_mode(args.credit_mode);
  if (args.coauthor_counting != "distinct" && args.coauthor_counting != "per-paper") {
    throw UsageError("unknown coauthor counting '" + args.coauthor_counting + "' (expected distinct or per-paper)");
  }
  const auto counting =
      args.coauthor_counting == "distinct" ? CoauthorCounting::DistinctPerYear : CoauthorCounting::PerPaperSum;
  std::vector<std::pair<int, int>> cdf_cells;
  for (const auto& cell : args.cdf_cells) {
    const auto w = YearWindow::parse(cell);  // "s:t"
    if (w.start >= w.end) throw UsageError("--cdf needs s < t, got " + cell);
    cdf_cells.emplace_back(w.start, w.end);
  }

  const auto cache = load_cache(args.cache);
  const Corpus& corpus = cache.corpus;
  const auto& w = corpus.window();

  RunManifest manifest("analyze", args.out);
  manifest.add_input(cache.jsonl);
  manifest.set_window(w.start, w.end);
  manifest.set_flag("sections", std::vector<std::string>(sections.begin(), sections.end()));
  manifest.set_flag("alive_policy", alive.to_string());
  manifest.set_flag("censor_guard", args.censor_guard);
  manifest.set_flag("fit_horizon", args.fit_horizon);
  manifest.set_flag("credit_mode", args.credit_mode);
  manifest.set_flag("reproduction_alive_policy", repro_alive.to_string());
  manifest.set_flag("coauthor_counting", args.coauthor_counting);
  manifest.set_flag("cap_max_n", args.cap_max_n);
  manifest.set_flag("min_tail_samples", args.min_tail_samples);
  manifest.set_flag("ccdf_cohorts", args.ccdf_cohorts);
  manifest.set_flag("cdf", args.cdf_cells);

  auto meta = [&](std::string table, std::string units) {
    return TableMeta{{"table", std::move(table)},
                     {"window", std::to_string(w.start) + ":" + std::to_string(w.end)},
                     {"units", std::move(units)}};
  };

  if (sections.count("arrival")) {
    const auto rows = arrival_report(corpus, counting);
    manifest.write("fig1b.csv", [&](std::ostream& os) {
      write_arrival_csv(os, meta("newcomers, immigrants, mainstream offspring and motif fractions per year",
                                 "counts of authors; immigrant_fraction and motif_* are fractions of newcomers / "
                                 "newcomer papers"),
                        rows);
    });
    manifest.write("fig1cde.csv", [&](std::ostream& os) {
      auto m = meta("mean annual coauthors per cohort", "coauthors per author-year");
      m.emplace_back("coauthor_counting", args.coauthor_counting);
      write_coauthor_csv(os, m, rows);
    });
  }

  if (sections.count("lifecycle")) {
    auto guard_meta = [&](std::string table, std::string units) {
      auto m = meta(std::move(table), std::move(units));
      m.emplace_back("censor_guard", std::to_string(args.censor_guard));
      return m;
    };
    manifest.write("fig2a.csv", [&](std::ostream& os) {
      write_imr_csv(os, guard_meta("infant mortality rate by arrival year", "fraction of newcomers with lifetime 1"),
                    imr_by_year(corpus, args.censor_guard));
    });
    manifest.write("fig2b.csv", [&](std::ostream& os) {
      write_retention_csv(os,
                          guard_meta("retention by year and academic age (age = t - arrival + 1)",
                                     "probability of continuing past the given age; n = authors alive at that age"),
                          retention_grid(corpus, args.censor_guard));
    });

    const FitOptions fit_options{args.fit_horizon, args.censor_guard, args.min_tail_samples};
    std::optional<LifetimeModel> overlay;
    json fit_doc;
    try {
      const auto fit = fit_lifetime_model(corpus, fit_options);
      overlay = fit.model;
      fit_doc = fit_to_json(fit);
    } catch (const std::invalid_argument& e) {
      fit_doc = {{"error", e.what()}};
    }
    fit_doc["cohort_horizon"] = args.fit_horizon;
    fit_doc["censor_guard"] = args.censor_guard;
    manifest.write_json("fit.json", fit_doc);

    std::vector<int> cohorts = args.ccdf_cohorts;
    if (cohorts.empty()) {
      for (int y = w.start; y <= w.end; y += 10) cohorts.push_back(y);
    }
    for (int c : cohorts) {
      if (corpus.newcomers_in(c).empty()) continue;
      manifest.write("fig2c_" + std::to_string(c) + ".csv", [&](std::ostream& os) {
        write_ccdf_csv(os,
                       guard_meta("lifetime CCDF of cohort " + std::to_string(c),
                                  "fraction of cohort with lifetime >= l years; model = fitted geometric overlay"),
                       c, lifetime_ccdf(corpus, c), overlay);
      });
    }
  }

  if (sections.count("activity")) {
    const auto strict_stats = stats(corpus, AlivePolicy::strict());
    const auto windowed_stats = stats(corpus, alive);
    manifest.write("figs1.csv", [&](std::ostream& os) {
      auto m = meta("alive authors, active authors and publications per year", "counts");
      m.emplace_back("alive_policy", "alive_strict=strict; alive_windowed=" + alive.to_string());
      write_stats_csv(os, m, strict_stats, windowed_stats);
    });
    manifest.write("fig3a.csv", [&](std::ostream& os) {
      auto m = meta("fraction of active among alive authors",
                    "rate_strict = active/alive_strict; rate = active/alive_windowed");
      m.emplace_back("alive_policy", alive.to_string());
      write_activity_csv(os, m, activity_rate(corpus, AlivePolicy::strict()), activity_rate(corpus, alive));
    });
    manifest.write("fig3b.csv", [&](std::ostream& os) {
      write_cap_csv(os,
                    meta("consecutively active probability CAP_N",
                         "probability; support = authors active on [t, t+N-1] with a paper at or after t+N"),
                    cap_grid(corpus, args.cap_max_n));
    });
  }

  if (sections.count("productivity")) {
    manifest.write("fig4.csv", [&](std::ostream& os) {
      auto m = meta("individual and community productivity",
                    "papers per author-year; cp_<cohort> = papers with a cohort author / active cohort size");
      m.emplace_back("cohort_cp_denominator", "cohort-active authors");
      m.emplace_back("career_min_age", "10");
      write_productivity_csv(os, m, productivity_report(corpus));
    });
  }

  if (sections.count("reproduction")) {
    const ReproductionOptions ro{credit, repro_alive};
    const auto surface = p_zero_surface(corpus, ro);
    auto rmeta = [&](std::string table, std::string units) {
      auto m = meta(std::move(table), std::move(units));
      m.emplace_back("credit_mode", args.credit_mode);
      m.emplace_back("alive_policy", repro_alive.to_string());
      return m;
    };
    manifest.write("fig5ab.csv", [&](std::ostream& os) {
      write_p0_surface_csv(os, rmeta("p(0) by arrival year s and year t", "probability; support = seniors"), surface);
    });
    manifest.write("mu.csv", [&](std::ostream& os) {
      write_mu_csv(os, rmeta("mean fractional offspring mu_{s,t}", "newcomers per senior"), surface);
    });
    manifest.write("table_s1.csv", [&](std::ostream& os) {
      write_mu_matrix_csv(os, rmeta("mu_{s,t}: rows fix s, columns fix t", "newcomers per senior; NA = empty cell"),
                          surface);
    });
    for (const auto& [s, t] : cdf_cells) {
      const auto dist = offspring_distribution(corpus, s, t, ro);
      if (!dist) continue;
      manifest.write("fig5cd_s" + std::to_string(s) + "_t" + std::to_string(t) + ".csv", [&](std::ostream& os) {
        auto m = rmeta("CDF of fractional offspring", "k = fractional offspring; cdf = P(K <= k)");
        m.emplace_back("support", std::to_string(dist->support()));
        write_cdf_csv(os, m, *dist);
      });
    }
  }

  const auto doc = manifest.commit();
  out << json{{"outputs", doc["outputs"].size()}, {"digest", doc["digest"]}}.dump() << '\n';
  return kOk;
}

// --- fit --------------------------------------------------------------------

struct FitArgs {
  std::string cache;
  std::string out;
  int censor_guard = 5;
  int fit_horizon = 20;
  std::size_t min_tail_samples = 1;
};

int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream&) {
  const auto cache = load_cache(args.cache);
  LifetimeFit fit;
  try {
    fit = fit_lifetime_model(cache.corpus, {args.fit_horizon, args.censor_guard, args.min_tail_samples});
  } catch (const std::invalid_argument& e) {
    throw IngestError(e.what());
  }
  RunManifest manifest("fit", args.out);
  manifest.add_input(cache.jsonl);
  manifest.set_window(cache.corpus.window().start, cache.corpus.window().end);
  manifest.set_flag("censor_guard", args.censor_guard);
  manifest.set_flag("fit_horizon", args.fit_horizon);
  manifest.set_flag("min_tail_samples", args.min_tail_samples);
  auto doc = fit_to_json(fit);
  manifest.write_json("fit.json", doc);
  manifest.commit();
  out << doc.dump() << '\n';
  return kOk;
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
  std::string config;
  std::string mode = "expected";
  std::optional<std::uint64_t> seed;
  bool emit_corpus = false;
  std::string out;
};

SimulationConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return SimulationConfig::from_json(doc);
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream&) {
  if (args.mode != "expected" && args.mode != "stochastic") {
    throw UsageError("--mode must be expected or stochastic");
  }
  if (args.mode == "stochastic" && !args.seed) throw UsageError("--seed is required in stochastic mode");
  if (args.mode == "expected" && args.emit_corpus) {
    throw UsageError("--emit-corpus needs --mode stochastic (the expectation recursion has no corpus)");
  }
  auto config = load_config(args.config);
  if (args.seed) config.seed = args.seed;

  RunManifest manifest("simulate", args.out);
  manifest.add_input(args.config);
  manifest.set_config(config.to_json());
  manifest.set_flag("mode", args.mode);
  manifest.set_flag("emit_corpus", args.emit_corpus);
  if (config.horizon > 0) manifest.set_window(config.start_year, config.start_year + config.horizon - 1);

  const TableMeta meta{{"table", "population trajectory"},
                       {"mode", args.mode},
                       {"units", args.mode == "expected" ? "expected authors" : "authors"},
                       {"seed", config.seed ? std::to_string(*config.seed) : "none"}};
  json summary{{"mode", args.mode}, {"horizon", config.horizon}};
  if (args.mode == "expected") {
    const auto traj = expected_trajectory(config);
    manifest.write("trajectory.csv", [&](std::ostream& os) { write_trajectory_csv(os, meta, traj); });
    if (!traj.empty()) summary["final_N"] = traj.back().alive;
  } else {
    const auto sim = stochastic_simulate(config, {args.emit_corpus});
    manifest.write("trajectory.csv", [&](std::ostream& os) { write_trajectory_csv(os, meta, sim.trajectory); });
    if (!sim.trajectory.empty()) summary["final_N"] = sim.trajectory.back().alive;
    summary["authors"] = sim.authors;
    if (args.emit_corpus && sim.corpus) {
      IngestReport report;
      report.records_read = report.papers_kept = sim.corpus->paper_count();
      write_corpus_cache(manifest, *sim.corpus, report, {{"format", "synthetic"}, {"seed", *config.seed}});
      summary["papers"] = sim.corpus->paper_count();
    }
  }
  const auto doc = manifest.commit();
  summary["digest"] = doc["digest"];
  out << summary.dump() << '\n';
  return kOk;
}

// --- round-trip -------------------------------------------------------------

struct RoundTripArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  int censor_guard = 5;
  int fit_horizon = 20;
  int boundary = 5;
};

int cmd_round_trip(const RoundTripArgs& args, std::ostream& out, std::ostream&) {
  auto config = load_config(args.config);
  if (args.seed) config.seed = args.seed;
  if (!config.seed) throw UsageError("round-trip needs --seed or a seed in the config");

  RoundTripOptions options;
  options.fit.cohort_horizon = args.fit_horizon;
  options.fit.censor_guard = args.censor_guard;
  options.boundary = args.boundary;
  const auto report = round_trip(config, options);

  RunManifest manifest("round-trip", args.out);
  manifest.add_input(args.config);
  manifest.set_config(config.to_json());
  manifest.set_flag("censor_guard", args.censor_guard);
  manifest.set_flag("fit_horizon", args.fit_horizon);
  manifest.set_flag("boundary", args.boundary);
  const auto doc = report.to_json();
  manifest.write_json("round_trip.json", doc);
  manifest.commit();
  out << doc.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Population analytics and branching-process simulation for publication corpora", "acadpop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("acadpop ") + ACADPOP_VERSION);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Validate a publication dump and write a corpus cache");
  ingest_cmd->add_option("--input", ingest.input, "JSONL or DBLP XML file")->required();
  ingest_cmd->add_option("--format", ingest.format, "Input format")
      ->check(CLI::IsMember({"jsonl", "dblp-xml"}))
      ->capture_default_str();
  ingest_cmd->add_option("--window", ingest.window, "Inclusive year window Y0:Y1")->capture_default_str();
  ingest_cmd->add_option("--out", ingest.out, "Cache directory")->required();

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Emit per-figure tables from a corpus cache");
  analyze_cmd->add_option("--cache", analyze.cache, "Corpus cache directory")->required();
  analyze_cmd->add_option("--out", analyze.out, "Output directory")->required();
  analyze_cmd->add_option("--sections", analyze.sections,
                          "arrival, lifecycle, activity, productivity, reproduction or all")
      ->delimiter(',')
      ->capture_default_str();
  analyze_cmd->add_option("--alive-policy", analyze.alive_policy, "strict or windowed:W")->capture_default_str();
  analyze_cmd->add_option("--censor-guard", analyze.censor_guard, "Years at the window end treated as censored")
      ->capture_default_str();
  analyze_cmd->add_option("--fit-horizon", analyze.fit_horizon, "Only fit cohorts arriving this many years before the end")
      ->capture_default_str();
  analyze_cmd->add_option("--min-tail-samples", analyze.min_tail_samples)->capture_default_str();
  analyze_cmd->add_option("--credit-mode", analyze.credit_mode, "drop or renormalize")->capture_default_str();
  analyze_cmd->add_option("--reproduction-alive", analyze.reproduction_alive, "Alive policy for offspring conditioning")
      ->capture_default_str();
  analyze_cmd->add_option("--coauthor-counting", analyze.coauthor_counting, "distinct or per-paper")
      ->capture_default_str();
  analyze_cmd->add_option("--cap-max-n", analyze.cap_max_n, "Largest N for CAP_N")->capture_default_str();
  analyze_cmd->add_option("--ccdf-cohorts", analyze.ccdf_cohorts, "Cohort years for lifetime CCDF tables")
      ->delimiter(',');
  analyze_cmd->add_option("--cdf", analyze.cdf_cells, "Offspring CDF cells as s:t")->delimiter(',');

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit the two-parameter lifetime model");
  fit_cmd->add_option("--cache", fit.cache, "Corpus cache directory")->required();
  fit_cmd->add_option("--out", fit.out, "Output directory")->required();
  fit_cmd->add_option("--censor-guard", fit.censor_guard)->capture_default_str();
  fit_cmd->add_option("--fit-horizon", fit.fit_horizon)->capture_default_str();
  fit_cmd->add_option("--min-tail-samples", fit.min_tail_samples)->capture_default_str();

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run the branching process");
  simulate_cmd->add_option("--config", simulate.config, "Simulation config JSON")->required();
  simulate_cmd->add_option("--mode", simulate.mode, "expected or stochastic")->capture_default_str();
  simulate_cmd->add_option("--seed", simulate.seed, "RNG seed (stochastic mode)");
  simulate_cmd->add_flag("--emit-corpus", simulate.emit_corpus, "Also write the synthetic corpus cache");
  simulate_cmd->add_option("--out", simulate.out, "Output directory")->required();

  RoundTripArgs rt;
  auto* rt_cmd = app.add_subcommand("round-trip", "Simulate, re-analyse and report parameter recovery");
  rt_cmd->add_option("--config", rt.config, "Simulation config JSON")->required();
  rt_cmd->add_option("--seed", rt.seed, "RNG seed");
  rt_cmd->add_option("--out", rt.out, "Output directory")->required();
  rt_cmd->add_option("--censor-guard", rt.censor_guard)->capture_default_str();
  rt_cmd->add_option("--fit-horizon", rt.fit_horizon)->capture_default_str();
  rt_cmd->add_option("--boundary", rt.boundary, "Years trimmed at each edge for activity recovery")
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*ingest_cmd) return cmd_ingest(ingest, out, err);
    if (*analyze_cmd) return cmd_analyze(analyze, out, err);
    if (*fit_cmd) return cmd_fit(fit, out, err);
    if (*simulate_cmd) return cmd_simulate(simulate, out, err);
    if (*rt_cmd) return cmd_round_trip(rt, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IngestError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace acadpop::cli
