#include "acadpop/tables.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <set>

namespace acadpop {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_number(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string("NA");
}

CsvWriter::CsvWriter(std::ostream& out, const TableMeta& meta, std::initializer_list<std::string_view> columns)
    : out_(out) {
  for (const auto& [key, value] : meta) out_ << "# " << key << ": " << value << '\n';
  for (auto c : columns) cell(c);
  end_row();
}

CsvWriter::CsvWriter(std::ostream& out, const TableMeta& meta, const std::vector<std::string>& columns)
    : out_(out) {
  for (const auto& [key, value] : meta) out_ << "# " << key << ": " << value << '\n';
  for (const auto& c : columns) cell(c);
  end_row();
}

CsvWriter& CsvWriter::cell(std::string_view text) {
  if (!first_) out_ << ',';
  first_ = false;
  if (text.find_first_of(",\"\n") != std::string_view::npos) {
    out_ << '"';
    for (char ch : text) {
      if (ch == '"') out_ << '"';
      out_ << ch;
    }
    out_ << '"';
  } else {
    out_ << text;
  }
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  first_ = true;
}

nlohmann::json to_json(const IngestReport& r) {
  return {{"records_read", r.records_read},
          {"papers_kept", r.papers_kept},
          {"dropped_out_of_window", r.dropped_out_of_window},
          {"duplicate_authors_collapsed", r.duplicate_authors_collapsed},
          {"rejected_empty_authors", r.rejected_empty_authors},
          {"skipped_missing_year", r.skipped_missing_year},
          {"skipped_missing_authors", r.skipped_missing_authors}};
}

void write_stats_csv(std::ostream& out, const TableMeta& meta, const std::vector<YearStats>& strict,
                     const std::vector<YearStats>& windowed) {
  CsvWriter csv(out, meta, {"year", "active", "alive_strict", "alive_windowed", "publications"});
  for (std::size_t i = 0; i < strict.size(); ++i) {
    csv.cell(strict[i].year).cell(strict[i].active).cell(strict[i].alive).cell(windowed[i].alive);
    csv.cell(strict[i].publications).end_row();
  }
}

void write_arrival_csv(std::ostream& out, const TableMeta& meta, const std::vector<ArrivalRow>& rows) {
  CsvWriter csv(out, meta,
                {"year", "newcomers", "immigrants", "mainstream", "immigrant_fraction", "newcomer_papers", "motif_i",
                 "motif_ii", "motif_iii", "motif_iv", "motif_v", "motif_vi"});
  for (const auto& r : rows) {
    csv.cell(r.year).cell(r.newcomers).cell(r.immigrants).cell(r.mainstream).cell(r.immigrant_fraction);
    csv.cell(r.motifs.newcomer_papers);
    for (std::size_t m = 0; m < kMotifCount; ++m) csv.cell(r.motifs.fraction(static_cast<Motif>(m)));
    csv.end_row();
  }
}

void write_coauthor_csv(std::ostream& out, const TableMeta& meta, const std::vector<ArrivalRow>& rows) {
  CsvWriter csv(out, meta,
                {"year", "active", "newcomers", "seniors", "immigrants", "mainstream", "newcomer_newcomer_coauthors"});
  for (const auto& r : rows) {
    const auto& c = r.coauthors;
    csv.cell(r.year).cell(c.active).cell(c.newcomers).cell(c.seniors).cell(c.immigrants).cell(c.mainstream);
    csv.cell(c.newcomer_newcomer_coauthors).end_row();
  }
}

void write_imr_csv(std::ostream& out, const TableMeta& meta, const std::map<int, ImrEntry>& imr) {
  CsvWriter csv(out, meta, {"year", "imr", "newcomers", "infant", "censored"});
  for (const auto& [year, e] : imr) {
    csv.cell(year).cell(e.value).cell(e.newcomers).cell(e.infant).cell(e.censored ? "1" : "0").end_row();
  }
}

void write_retention_csv(std::ostream& out, const TableMeta& meta, const std::vector<RetentionCell>& cells) {
  CsvWriter csv(out, meta, {"year", "age", "value", "n"});
  for (const auto& c : cells) csv.cell(c.year).cell(c.age).cell(c.estimate.value).cell(c.estimate.support).end_row();
}

void write_ccdf_csv(std::ostream& out, const TableMeta& meta, int cohort, const std::vector<double>& ccdf,
                    const std::optional<LifetimeModel>& overlay) {
  CsvWriter csv(out, meta, {"cohort", "lifetime", "ccdf", "model"});
  for (std::size_t j = 0; j < ccdf.size(); ++j) {
    const int l = static_cast<int>(j) + 1;
    csv.cell(cohort).cell(l).cell(ccdf[j]);
    csv.cell(overlay ? std::optional<double>(overlay->survival(l - 1)) : std::nullopt).end_row();
  }
}

nlohmann::json fit_to_json(const LifetimeFit& fit) {
  return {{"alpha", fit.model.alpha},
          {"beta", fit.model.beta},
          {"n", fit.samples},
          {"tail_events", fit.tail_events},
          {"censored", fit.censored},
          {"cohorts", fit.cohorts}};
}

void write_activity_csv(std::ostream& out, const TableMeta& meta, const std::vector<ActivityRow>& strict,
                        const std::vector<ActivityRow>& windowed) {
  CsvWriter csv(out, meta, {"year", "active", "alive_strict", "alive_windowed", "rate_strict", "rate"});
  for (std::size_t i = 0; i < strict.size(); ++i) {
    csv.cell(strict[i].year).cell(strict[i].active).cell(strict[i].alive).cell(windowed[i].alive);
    csv.cell(strict[i].rate).cell(windowed[i].rate).end_row();
  }
}

void write_cap_csv(std::ostream& out, const TableMeta& meta, const std::vector<CapCell>& cells) {
  CsvWriter csv(out, meta, {"t", "N", "value", "support"});
  for (const auto& c : cells) csv.cell(c.t).cell(c.n).cell(c.estimate.value).cell(c.estimate.support).end_row();
}

void write_productivity_csv(std::ostream& out, const TableMeta& meta, const std::vector<ProductivityRow>& rows) {
  CsvWriter csv(out, meta,
                {"year", "ip_all", "cp_all", "ip_transient", "cp_transient", "ip_career", "cp_career", "newcomer_ip",
                 "authors_per_paper"});
  for (const auto& r : rows) {
    csv.cell(r.year).cell(r.ip_all).cell(r.cp_all).cell(r.ip_transient).cell(r.cp_transient);
    csv.cell(r.ip_career).cell(r.cp_career).cell(r.newcomer_ip).cell(r.authors_per_paper).end_row();
  }
}

void write_p0_surface_csv(std::ostream& out, const TableMeta& meta, const std::vector<SurfaceCell>& cells) {
  CsvWriter csv(out, meta, {"s", "t", "p0", "support"});
  for (const auto& c : cells) csv.cell(c.s).cell(c.t).cell(c.p_zero).cell(c.support).end_row();
}

void write_mu_csv(std::ostream& out, const TableMeta& meta, const std::vector<SurfaceCell>& cells) {
  CsvWriter csv(out, meta, {"s", "t", "mu", "support"});
  for (const auto& c : cells) csv.cell(c.s).cell(c.t).cell(c.mu).cell(c.support).end_row();
}

void write_mu_matrix_csv(std::ostream& out, const TableMeta& meta, const std::vector<SurfaceCell>& cells) {
  std::set<int> ss, ts;
  std::map<std::pair<int, int>, double> mu;
  for (const auto& c : cells) {
    ss.insert(c.s);
    ts.insert(c.t);
    mu[{c.s, c.t}] = c.mu;
  }
  std::vector<std::string> columns{"s\\t"};
  for (int t : ts) columns.push_back(std::to_string(t));
  CsvWriter csv(out, meta, columns);
  for (int s : ss) {
    csv.cell(s);
    for (int t : ts) {
      auto it = mu.find({s, t});
      csv.cell(it == mu.end() ? std::nullopt : std::optional<double>(it->second));
    }
    csv.end_row();
  }
}

void write_cdf_csv(std::ostream& out, const TableMeta& meta, const OffspringDistribution& dist) {
  CsvWriter csv(out, meta, {"k", "cdf"});
  for (const auto& step : dist.steps()) csv.cell(step.k).cell(step.cdf).end_row();
}

}  // namespace acadpop
