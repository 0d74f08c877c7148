#pragma once

#include "acadpop/corpus.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace acadpop {

/// Exact fractional offspring credit.
using Credit = boost::multiprecision::cpp_rational;

inline double to_double(const Credit& c) { return c.convert_to<double>(); }

enum class CreditMode {
  /// Each first-year paper carries 1/P of the newcomer; papers without a
  /// senior coauthor pass their share to nobody.
  DropSeniorless,
  /// Shares are spread over the senior-bearing papers only, so every
  /// mainstream newcomer distributes exactly 1.
  Renormalize,
};

struct ReproductionOptions {
  CreditMode credit = CreditMode::DropSeniorless;
  AlivePolicy alive = AlivePolicy::strict();
};

/// Credit flows from the newcomers of one year to their senior coauthors.
struct OffspringLedger {
  int year = 0;
  std::map<AuthorIndex, Credit> senior_credit;
  /// Every newcomer of the year, including those that distributed nothing.
  std::map<AuthorIndex, Credit> newcomer_distributed;

  Credit credit_of(AuthorIndex senior) const;
  Credit total() const;
};

OffspringLedger assign_fractional_offspring(const Corpus& corpus, int year,
                                            CreditMode mode = CreditMode::DropSeniorless);

struct CdfStep {
  double k = 0;
  double cdf = 0;  // P(K <= k)
};

/// Fractional offspring of seniors arriving in `s`, alive and active in `t`.
struct OffspringDistribution {
  int s = 0;
  int t = 0;
  std::vector<Credit> samples;  // one per conditioned senior, in author order
  Credit mu_exact;
  double p_zero = 0;
  double mu = 0;

  std::size_t support() const noexcept { return samples.size(); }
  /// Right-continuous empirical CDF.
  double cdf(double k) const;
  /// One step per distinct sample value, ascending.
  std::vector<CdfStep> steps() const;
};

/// nullopt when no author arriving in s is alive and active in t.
/// Throws std::invalid_argument unless s < t.
std::optional<OffspringDistribution> offspring_distribution(const Corpus& corpus, int s, int t,
                                                            const ReproductionOptions& options = {});
std::optional<OffspringDistribution> offspring_distribution(const Corpus& corpus, const OffspringLedger& ledger,
                                                            int s, const ReproductionOptions& options = {});

struct SurfaceCell {
  int s = 0;
  int t = 0;
  double p_zero = 0;
  double mu = 0;
  std::size_t support = 0;
  std::size_t zeros = 0;
  Credit credit;  // total credit of the cell
};

/// p(0) and mu for every (s, t) with a non-empty conditioning set.
std::vector<SurfaceCell> p_zero_surface(const Corpus& corpus, const ReproductionOptions& options = {});

}  // namespace acadpop
