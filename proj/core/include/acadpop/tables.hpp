#pragma once

#include "acadpop/activity.hpp"
#include "acadpop/arrival.hpp"
#include "acadpop/corpus.hpp"
#include "acadpop/lifecycle.hpp"
#include "acadpop/productivity.hpp"
#include "acadpop/reproduction.hpp"
#include "acadpop/simulator.hpp"

#include <json.hpp>

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acadpop {

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);
/// "NA" for an undefined value.
std::string format_number(const std::optional<double>& value);

/// Metadata written as '#'-prefixed lines ahead of every table.
using TableMeta = std::vector<std::pair<std::string, std::string>>;

/// CSV emitter: metadata comment lines, a header row, then data rows.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const TableMeta& meta, std::initializer_list<std::string_view> columns);
  CsvWriter(std::ostream& out, const TableMeta& meta, const std::vector<std::string>& columns);

  CsvWriter& cell(std::string_view text);
  CsvWriter& cell(double value) { return cell(format_number(value)); }
  CsvWriter& cell(const std::optional<double>& value) { return cell(format_number(value)); }
  CsvWriter& cell(int value) { return cell(std::to_string(value)); }
  CsvWriter& cell(std::size_t value) { return cell(std::to_string(value)); }
  CsvWriter& cell(std::int64_t value) { return cell(std::to_string(value)); }
  void end_row();

 private:
  std::ostream& out_;
  bool first_ = true;
};

nlohmann::json to_json(const IngestReport& report);

void write_stats_csv(std::ostream& out, const TableMeta& meta, const std::vector<YearStats>& strict,
                     const std::vector<YearStats>& windowed);
void write_arrival_csv(std::ostream& out, const TableMeta& meta, const std::vector<ArrivalRow>& rows);
void write_coauthor_csv(std::ostream& out, const TableMeta& meta, const std::vector<ArrivalRow>& rows);
void write_imr_csv(std::ostream& out, const TableMeta& meta, const std::map<int, ImrEntry>& imr);
void write_retention_csv(std::ostream& out, const TableMeta& meta, const std::vector<RetentionCell>& cells);
void write_ccdf_csv(std::ostream& out, const TableMeta& meta, int cohort, const std::vector<double>& ccdf,
                    const std::optional<LifetimeModel>& overlay);
nlohmann::json fit_to_json(const LifetimeFit& fit);
void write_activity_csv(std::ostream& out, const TableMeta& meta, const std::vector<ActivityRow>& strict,
                        const std::vector<ActivityRow>& windowed);
void write_cap_csv(std::ostream& out, const TableMeta& meta, const std::vector<CapCell>& cells);
void write_productivity_csv(std::ostream& out, const TableMeta& meta, const std::vector<ProductivityRow>& rows);
void write_p0_surface_csv(std::ostream& out, const TableMeta& meta, const std::vector<SurfaceCell>& cells);
void write_mu_csv(std::ostream& out, const TableMeta& meta, const std::vector<SurfaceCell>& cells);
/// Wide mu matrix: one row per arrival year s, one column per year t.
void write_mu_matrix_csv(std::ostream& out, const TableMeta& meta, const std::vector<SurfaceCell>& cells);
void write_cdf_csv(std::ostream& out, const TableMeta& meta, const OffspringDistribution& dist);

template <typename T>
void write_trajectory_csv(std::ostream& out, const TableMeta& meta, const std::vector<TrajectoryRow<T>>& rows) {
  CsvWriter csv(out, meta, {"t", "N", "B", "D", "I", "M"});
  for (const auto& r : rows) {
    csv.cell(r.t).cell(r.alive).cell(r.births).cell(r.deaths).cell(r.immigrants).cell(r.mainstream).end_row();
  }
}

}  // namespace acadpop
