#include "acadpop/activity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace acadpop {

std::vector<ActivityRow> activity_rate(const Corpus& corpus, const AlivePolicy& policy) {
  std::vector<ActivityRow> rows;
  for (const auto& s : stats(corpus, policy)) {
    ActivityRow row{s.year, s.active, s.alive, std::nullopt};
    if (row.alive > 0) row.rate = static_cast<double>(row.active) / static_cast<double>(row.alive);
    rows.push_back(row);
  }
  return rows;
}

std::vector<ActivityRow> interior_activity_rate(const Corpus& corpus) {
  const auto& w = corpus.window();
  std::vector<ActivityRow> rows;
  for (int y = w.start; y <= w.end; ++y) rows.push_back({y, 0, 0, std::nullopt});
  for (const auto& rec : corpus.authors()) {
    for (int y = rec.arrival_year + 1; y < rec.last_year; ++y) {
      auto& row = rows[static_cast<std::size_t>(y - w.start)];
      ++row.alive;
      row.active += rec.active_in(y);
    }
  }
  for (auto& row : rows) {
    if (row.alive > 0) row.rate = static_cast<double>(row.active) / static_cast<double>(row.alive);
  }
  return rows;
}

CapEstimate cap_n(const Corpus& corpus, int t, int n) {
  const auto& w = corpus.window();
  if (n < 1) throw std::invalid_argument("cap_n: N must be >= 1");
  if (!w.contains(t) || !w.contains(t + n)) {
    throw std::invalid_argument("cap_n: [" + std::to_string(t) + ", " + std::to_string(t + n) + "] leaves the window");
  }
  CapEstimate est;
  for (auto a : corpus.active_in(t)) {
    const auto& rec = corpus.author(a);
    if (rec.last_year < t + n) continue;
    bool consecutive = true;
    for (int y = t + 1; y < t + n && consecutive; ++y) consecutive = rec.active_in(y);
    if (!consecutive) continue;
    ++est.support;
    est.numerator += rec.active_in(t + n);
  }
  if (est.support > 0) est.value = static_cast<double>(est.numerator) / static_cast<double>(est.support);
  return est;
}

std::vector<CapCell> cap_grid(const Corpus& corpus, int max_n) {
  std::vector<CapCell> cells;
  const auto& w = corpus.window();
  for (int t = w.start; t < w.end; ++t) {
    for (int n = 1; n <= max_n && t + n <= w.end; ++n) {
      auto est = cap_n(corpus, t, n);
      if (est.support > 0) cells.push_back({t, n, est});
    }
  }
  return cells;
}

}  // namespace acadpop
