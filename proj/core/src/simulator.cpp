#include "acadpop/simulator.hpp"

#include "acadpop/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace acadpop {

double YearSeries::at(int t) const {
  if (values_.empty()) return constant_;
  const auto i = static_cast<std::size_t>(std::clamp<int>(t, 1, static_cast<int>(values_.size())) - 1);
  return values_[i];
}

double CellGrid::at(int s, int t) const {
  auto it = cells_.find({s, t});
  return it == cells_.end() ? fallback_ : it->second;
}

double OffspringConfig::p_zero_at(int s, int t) const {
  if (p_zero) return p_zero->at(s, t);
  return std::max(0.0, 1.0 - mu.at(s, t));
}

OffspringSampler::OffspringSampler(double p_zero, double mu) : p_zero_(p_zero), extra_(0) {
  check(p_zero, mu);
  if (p_zero_ < 1.0) extra_ = std::max(0.0, mu / (1.0 - p_zero_) - 1.0);
}

void OffspringSampler::check(double p_zero, double mu) {
  if (!(p_zero >= 0.0 && p_zero <= 1.0)) throw ConfigError("offspring.p_zero must lie in [0, 1]");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw ConfigError("offspring.mu must be a finite value >= 0");
  if (p_zero >= 1.0) {
    if (mu > 0.0) throw ConfigError("offspring: p_zero = 1 forces mu = 0");
    return;
  }
  // Shifted Poisson needs mean >= 1 among non-zero draws.
  if (mu / (1.0 - p_zero) < 1.0 - 1e-12) {
    throw ConfigError("offspring: infeasible sampling family, mu / (1 - p_zero) = " +
                      std::to_string(mu / (1.0 - p_zero)) + " < 1");
  }
}

namespace {

void check_probability(double v, const std::string& field) {
  if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(field + " must lie in [0, 1], got " + std::to_string(v));
}

void check_series(const YearSeries& s, int horizon, const std::string& field, bool probability) {
  auto check = [&](double v, const std::string& name) {
    if (probability) {
      check_probability(v, name);
    } else if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ConfigError(name + " must be a finite value >= 0, got " + std::to_string(v));
    }
  };
  if (s.is_constant()) {
    check(s.constant(), field);
    return;
  }
  if (static_cast<int>(s.values().size()) != horizon) {
    throw ConfigError(field + " has " + std::to_string(s.values().size()) + " entries, horizon is " +
                      std::to_string(horizon));
  }
  for (std::size_t i = 0; i < s.values().size(); ++i) check(s.values()[i], field + "[" + std::to_string(i) + "]");
}

YearSeries series_from_json(const nlohmann::json& j, const std::string& field) {
  if (j.is_number()) return YearSeries(j.get<double>());
  if (j.is_array()) {
    std::vector<double> values;
    for (const auto& v : j) {
      if (!v.is_number()) throw ConfigError(field + " entries must be numbers");
      values.push_back(v.get<double>());
    }
    return YearSeries(std::move(values));
  }
  throw ConfigError(field + " must be a number or an array of numbers");
}

nlohmann::json series_to_json(const YearSeries& s) {
  if (s.is_constant()) return s.constant();
  return s.values();
}

CellGrid grid_from_json(const nlohmann::json& j, const std::string& field) {
  if (j.is_number()) return CellGrid(j.get<double>());
  if (!j.is_object() || !j.contains("default") || !j["default"].is_number()) {
    throw ConfigError(field + " must be a number or {\"default\": x, \"cells\": [...]}");
  }
  CellGrid grid(j["default"].get<double>());
  if (j.contains("cells")) {
    for (const auto& c : j["cells"]) {
      if (!c.contains("s") || !c.contains("t") || !c.contains("value")) {
        throw ConfigError(field + ".cells entries need s, t and value");
      }
      grid.set(c["s"].get<int>(), c["t"].get<int>(), c["value"].get<double>());
    }
  }
  return grid;
}

nlohmann::json grid_to_json(const CellGrid& g) {
  if (g.cells().empty()) return g.fallback();
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [key, value] : g.cells()) cells.push_back({{"s", key.first}, {"t", key.second}, {"value", value}});
  return {{"default", g.fallback()}, {"cells", cells}};
}

}  // namespace

void SimulationConfig::validate() const {
  if (horizon < 0) throw ConfigError("horizon must be >= 0");
  check_series(immigration, horizon, "immigration", false);
  check_series(activity, horizon, "activity", true);
  lifetime.validate();
  if (!(papers_per_active_year >= 1.0) || !std::isfinite(papers_per_active_year)) {
    throw ConfigError("papers_per_active_year must be >= 1");
  }

  std::set<std::pair<int, int>> keys(
      {{0, 0}});  // (0, 0) never appears in a grid, so it probes the fallbacks
  for (const auto& [k, _] : offspring.mu.cells()) keys.insert(k);
  if (offspring.p_zero) {
    for (const auto& [k, _] : offspring.p_zero->cells()) keys.insert(k);
  }
  for (const auto& [s, t] : keys) {
    const double mu = offspring.mu.at(s, t);
    if (!(mu >= 0.0) || !std::isfinite(mu)) throw ConfigError("offspring.mu must be a finite value >= 0");
    OffspringSampler::check(offspring.p_zero_at(s, t), mu);
  }
}

SimulationConfig SimulationConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("simulation config must be a JSON object");
  static const std::set<std::string> known = {"horizon",  "start_year", "immigration", "lifetime",
                                              "activity", "offspring",  "papers_per_active_year", "seed"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  SimulationConfig c;
  try {
    if (j.contains("horizon")) c.horizon = j["horizon"].get<int>();
    if (j.contains("start_year")) c.start_year = j["start_year"].get<int>();
    if (j.contains("immigration")) c.immigration = series_from_json(j["immigration"], "immigration");
    if (j.contains("activity")) c.activity = series_from_json(j["activity"], "activity");
    if (j.contains("lifetime")) {
      const auto& l = j["lifetime"];
      if (!l.is_object()) throw ConfigError("lifetime must be an object {alpha, beta}");
      if (l.contains("alpha")) c.lifetime.alpha = l["alpha"].get<double>();
      if (l.contains("beta")) c.lifetime.beta = l["beta"].get<double>();
    }
    if (j.contains("offspring")) {
      const auto& o = j["offspring"];
      if (!o.is_object()) throw ConfigError("offspring must be an object {mu, p_zero}");
      if (o.contains("mu")) c.offspring.mu = grid_from_json(o["mu"], "offspring.mu");
      if (o.contains("p_zero")) c.offspring.p_zero = grid_from_json(o["p_zero"], "offspring.p_zero");
    }
    if (j.contains("papers_per_active_year")) c.papers_per_active_year = j["papers_per_active_year"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config type error: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::json SimulationConfig::to_json() const {
  nlohmann::json j;
  j["horizon"] = horizon;
  j["start_year"] = start_year;
  j["immigration"] = series_to_json(immigration);
  j["lifetime"] = {{"alpha", lifetime.alpha}, {"beta", lifetime.beta}};
  j["activity"] = series_to_json(activity);
  j["offspring"]["mu"] = grid_to_json(offspring.mu);
  if (offspring.p_zero) j["offspring"]["p_zero"] = grid_to_json(*offspring.p_zero);
  j["papers_per_active_year"] = papers_per_active_year;
  if (seed) j["seed"] = *seed;
  return j;
}

ExpectedTrajectory expected_trajectory(const SimulationConfig& config) {
  config.validate();
  const int T = config.horizon;
  ExpectedTrajectory out;
  out.reserve(static_cast<std::size_t>(T));
  std::vector<double> births(static_cast<std::size_t>(T) + 1, 0.0);

  double alive = 0;
  for (int t = 1; t <= T; ++t) {
    double mainstream = 0;
    double deaths = 0;
    const double theta = config.activity.at(t);
    for (int s = 1; s < t; ++s) {
      const double b = births[static_cast<std::size_t>(s)];
      mainstream += b * config.lifetime.survival(t - s) * theta * config.offspring.mu.at(s, t);
      deaths += b * config.lifetime.pmf(t - s);
    }
    const double immigrants = config.immigration.at(t);
    const double b = immigrants + mainstream;
    births[static_cast<std::size_t>(t)] = b;
    alive = alive + b - deaths;
    out.push_back({t, alive, b, deaths, immigrants, mainstream});
  }
  return out;
}

namespace {

struct SimAuthor {
  int arrival;
  int last;
  std::int64_t parent;  // -1 for immigrants
};

std::string author_name(std::size_t index) { return "A" + std::to_string(index + 1); }

}  // namespace

SimulationResult stochastic_simulate(const SimulationConfig& config, const SimulationOptions& options) {
  config.validate();
  if (!config.seed) throw ConfigError("stochastic simulation requires a seed");

  std::mt19937_64 rng(*config.seed);
  const int T = config.horizon;
  const double extra_papers = config.papers_per_active_year - 1.0;

  std::vector<SimAuthor> authors;
  std::vector<std::uint32_t> alive;
  std::vector<std::uint32_t> active_seniors;
  std::vector<std::uint32_t> newcomers;

  std::optional<CorpusBuilder> builder;
  if (options.build_corpus && T > 0) builder.emplace(YearWindow{config.start_year, config.start_year + T - 1});
  std::size_t paper_serial = 0;

  auto paper_count = [&]() {
    return extra_papers > 0.0 ? 1 + std::poisson_distribution<int>(extra_papers)(rng) : 1;
  };
  auto emit = [&](int year, std::vector<std::string> names) {
    builder->add("P" + std::to_string(++paper_serial), year, std::move(names));
  };

  SimulationResult result;
  std::int64_t population = 0;
  for (int t = 1; t <= T; ++t) {
    const int year = config.start_year + t - 1;

    std::int64_t deaths = 0;
    std::erase_if(alive, [&](std::uint32_t a) {
      const bool gone = authors[a].last < t;
      deaths += gone;
      return gone;
    });

    active_seniors.clear();
    newcomers.clear();
    const double theta = config.activity.at(t);
    std::bernoulli_distribution active_draw(theta);
    std::int64_t mainstream = 0;
    for (auto a : alive) {
      const auto& author = authors[a];
      const bool active = author.last == t || active_draw(rng);
      if (!active) continue;
      active_seniors.push_back(a);
      const OffspringSampler sampler(config.offspring.p_zero_at(author.arrival, t),
                                     config.offspring.mu.at(author.arrival, t));
      const int k = sampler(rng);
      for (int i = 0; i < k; ++i) {
        newcomers.push_back(static_cast<std::uint32_t>(authors.size()));
        authors.push_back({t, t, static_cast<std::int64_t>(a)});
        ++mainstream;
      }
    }
    const auto immigrants =
        static_cast<std::int64_t>(std::poisson_distribution<std::int64_t>(config.immigration.at(t))(rng));
    for (std::int64_t i = 0; i < immigrants; ++i) {
      newcomers.push_back(static_cast<std::uint32_t>(authors.size()));
      authors.push_back({t, t, -1});
    }
    for (auto n : newcomers) authors[n].last = t + sample_lifetime(rng, config.lifetime) - 1;

    if (builder) {
      for (auto a : active_seniors) {
        const int papers = paper_count();
        for (int i = 0; i < papers; ++i) emit(year, {author_name(a)});
      }
      for (auto n : newcomers) {
        const int papers = paper_count();
        const auto parent = authors[n].parent;
        for (int i = 0; i < papers; ++i) {
          if (parent >= 0) {
            emit(year, {author_name(n), author_name(static_cast<std::size_t>(parent))});
          } else {
            emit(year, {author_name(n)});
          }
        }
      }
    }

    alive.insert(alive.end(), newcomers.begin(), newcomers.end());
    const auto births = immigrants + mainstream;
    population = population + births - deaths;
    result.trajectory.push_back({t, population, births, deaths, immigrants, mainstream});
  }

  result.authors = authors.size();
  if (builder) result.corpus = std::move(*builder).build();
  return result;
}

}  // namespace acadpop
