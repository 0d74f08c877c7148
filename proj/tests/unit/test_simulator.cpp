#include "acadpop/error.hpp"
#include "acadpop/lifecycle.hpp"
#include "acadpop/round_trip.hpp"
#include "acadpop/simulator.hpp"

#include "test_paths.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace acadpop {
namespace {

SimulationConfig three_step() {
  std::ifstream in(testing::data_path("three_step.json"));
  return SimulationConfig::from_json(nlohmann::json::parse(in));
}

TEST(Expected, ThreeStepHandValues) {
  const auto traj = expected_trajectory(three_step());
  ASSERT_EQ(traj.size(), 3u);
  const double n[] = {100, 175, 265}, b[] = {100, 125, 155}, d[] = {0, 50, 65}, m[] = {0, 25, 55};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(traj[i].t, i + 1);
    EXPECT_NEAR(traj[i].alive, n[i], 1e-9);
    EXPECT_NEAR(traj[i].births, b[i], 1e-9);
    EXPECT_NEAR(traj[i].deaths, d[i], 1e-9);
    EXPECT_NEAR(traj[i].mainstream, m[i], 1e-9);
    EXPECT_NEAR(traj[i].immigrants, 100, 1e-12);
  }
}

TEST(Expected, OneYearLifetimesWithoutReproductionStayFlat) {
  SimulationConfig c;
  c.horizon = 20;
  c.immigration = 40.0;
  c.lifetime = {1.0, 0.5};
  c.offspring.mu = 0.0;
  const auto traj = expected_trajectory(c);
  for (const auto& r : traj) {
    EXPECT_NEAR(r.births, 40, 1e-12);
    EXPECT_NEAR(r.alive, 40, 1e-12);
    EXPECT_NEAR(r.deaths, r.t == 1 ? 0 : 40, 1e-12);
  }
}

TEST(Expected, ZeroActivityMeansNoMainstream) {
  SimulationConfig c;
  c.horizon = 30;
  c.activity = 0.0;
  c.offspring.mu = 2.0;
  for (const auto& r : expected_trajectory(c)) EXPECT_EQ(r.mainstream, 0.0);
  c.horizon = 0;
  EXPECT_TRUE(expected_trajectory(c).empty());
}

TEST(Expected, AliveEqualsSurvivorSumOnRandomConfigs) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int rep = 0; rep < 25; ++rep) {
    SimulationConfig c;
    c.horizon = 60;
    std::vector<double> imm(60);
    for (auto& v : imm) v = 200 * u(rng);
    c.immigration = YearSeries(imm);
    c.lifetime = {u(rng), 0.98 * u(rng)};
    c.activity = u(rng);
    c.offspring.mu = 1.5 * u(rng);
    const auto traj = expected_trajectory(c);
    for (int t = 1; t <= 60; ++t) {
      double sum = 0;
      for (int s = 1; s <= t; ++s) sum += traj[s - 1].births * (s == t ? 1.0 : c.lifetime.survival(t - s));
      EXPECT_NEAR(traj[t - 1].alive, sum, 1e-9 * std::max(1.0, sum));
    }
  }
}

TEST(Expected, SubcriticalConvergesAndSupercriticalGrows) {
  SimulationConfig sub;
  sub.horizon = 400;
  sub.lifetime = {0.5, 0.9};
  sub.activity = 0.5;
  sub.offspring.mu = 0.1;
  const auto a = expected_trajectory(sub);
  // Stationary size: I E[L] / (1 - R) with R = theta mu E[L - 1].
  const double r0 = 0.5 * 0.1 * (sub.lifetime.mean() - 1);
  const double limit = 100 * sub.lifetime.mean() / (1 - r0);
  EXPECT_NEAR(a.back().alive, limit, 1e-6 * limit);
  EXPECT_NEAR(a.back().alive, a[a.size() - 2].alive, 1e-6);

  SimulationConfig sup;
  sup.horizon = 200;
  sup.lifetime = {0.5095, 0.9577};
  sup.activity = 0.5;
  sup.offspring.mu = 0.56;
  const auto b = expected_trajectory(sup);
  for (std::size_t i = 1; i < b.size(); ++i) EXPECT_GT(b[i].alive, b[i - 1].alive);
  const double g1 = b[199].alive / b[198].alive, g2 = b[149].alive / b[148].alive;
  EXPECT_GT(g1, 1.01);
  EXPECT_NEAR(g1, g2, 1e-4);
}

TEST(Config, ValidationAndJsonRoundTrip) {
  auto c = three_step();
  c.seed = 9;
  c.offspring.mu.set(1, 3, 0.7);
  const auto back = SimulationConfig::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());

  auto bad = c;
  bad.lifetime.alpha = 1.5;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = c;
  bad.activity = YearSeries(std::vector<double>{0.5, 0.5});
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = c;
  bad.offspring.p_zero = CellGrid(0.9);  // mu / (1 - p0) = 5 is fine
  EXPECT_NO_THROW(bad.validate());
  bad.offspring.p_zero = CellGrid(0.1);  // mu / (1 - p0) < 1
  EXPECT_THROW(bad.validate(), ConfigError);
  EXPECT_THROW(SimulationConfig::from_json({{"horizon", 3}, {"bogus", 1}}), ConfigError);
  EXPECT_THROW(SimulationConfig::from_json({{"horizon", "three"}}), ConfigError);
  EXPECT_THROW(SimulationConfig::from_json(nlohmann::json::array()), ConfigError);
}

TEST(Sampler, MeanAndZeroAtom) {
  for (auto [p0, mu] : {std::pair{0.6, 0.56}, std::pair{0.0, 2.5}, std::pair{0.3, 1.0}}) {
    OffspringSampler sample(p0, mu);
    std::mt19937_64 rng(17);
    const int n = 1000000;
    double sum = 0, sq = 0;
    long zeros = 0;
    for (int i = 0; i < n; ++i) {
      const double k = sample(rng);
      sum += k;
      sq += k * k;
      zeros += k == 0;
    }
    const double mean = sum / n, var = sq / n - mean * mean;
    EXPECT_NEAR(mean, mu, 3 * std::sqrt(var / n)) << p0 << " " << mu;
    EXPECT_NEAR(double(zeros) / n, p0, 3 * std::sqrt(p0 * (1 - p0) / n) + 1e-12);
  }
  EXPECT_THROW(OffspringSampler(0.2, 0.5), ConfigError);
  EXPECT_THROW(OffspringSampler(1.0, 0.5), ConfigError);
  EXPECT_NO_THROW(OffspringSampler(1.0, 0.0));
}

TEST(Stochastic, RequiresSeed) {
  auto c = three_step();
  EXPECT_THROW(stochastic_simulate(c), ConfigError);
}

TEST(Stochastic, DeterministicForASeed) {
  auto c = three_step();
  c.horizon = 12;
  c.activity = 0.7;
  c.seed = 123;
  const auto a = stochastic_simulate(c), b = stochastic_simulate(c);
  std::ostringstream ja, jb;
  write_jsonl(*a.corpus, ja);
  write_jsonl(*b.corpus, jb);
  EXPECT_EQ(ja.str(), jb.str());
  for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
    EXPECT_EQ(a.trajectory[i].alive, b.trajectory[i].alive);
    EXPECT_EQ(a.trajectory[i].mainstream, b.trajectory[i].mainstream);
  }
  c.seed = 124;
  std::ostringstream jc;
  write_jsonl(*stochastic_simulate(c).corpus, jc);
  EXPECT_NE(ja.str(), jc.str());
}

TEST(Stochastic, LedgerAndCorpusAgreeWhenAlwaysActive) {
  auto c = three_step();
  c.horizon = 25;
  c.lifetime = {0.4, 0.8};
  c.offspring.mu = 0.6;
  c.offspring.p_zero = CellGrid(0.5);
  c.papers_per_active_year = 1.5;
  c.seed = 5;
  const auto r = stochastic_simulate(c);
  ASSERT_TRUE(r.corpus);
  std::int64_t prev = 0, births = 0;
  for (const auto& row : r.trajectory) {
    EXPECT_EQ(row.alive, prev + row.births - row.deaths);
    EXPECT_EQ(row.births, row.immigrants + row.mainstream);
    prev = row.alive;
    births += row.births;
    const auto& corpus = *r.corpus;
    const int year = c.start_year + row.t - 1;
    std::int64_t alive = 0;
    for (const auto& a : corpus.authors()) alive += a.arrival_year <= year && year <= a.last_year;
    EXPECT_EQ(alive, row.alive) << "t " << row.t;
    EXPECT_EQ(static_cast<std::int64_t>(corpus.newcomers_in(year).size()), row.births);
  }
  EXPECT_EQ(static_cast<std::int64_t>(r.authors), births);
  EXPECT_EQ(r.corpus->window(), (YearWindow{1960, 1984}));
}

TEST(Stochastic, OneYearLifetimesGiveFullInfantMortality) {
  SimulationConfig c;
  c.horizon = 10;
  c.lifetime = {1.0, 0.0};
  c.offspring.mu = 0.0;
  c.seed = 1;
  const auto r = stochastic_simulate(c);
  for (const auto& [year, e] : imr_by_year(*r.corpus, 0)) {
    if (e.newcomers) EXPECT_DOUBLE_EQ(e.value, 1.0) << year;
  }
}

TEST(RoundTrip, RejectsUnderpoweredConfigs) {
  auto c = three_step();
  c.seed = 1;
  EXPECT_THROW(round_trip(c), ConfigError);
}

}  // namespace
}  // namespace acadpop
