#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nbnc/centrality.hpp"
#include "nbnc/graph.hpp"

namespace nbnc {

struct Network {
  std::string name;
  Graph graph;
};

/// Operating-condition grid. The defaults are the published design:
/// 3 betas x 2 mus x 5 lambdas x 2 strategies = 60 conditions per network,
/// 50 trials each, at most 20 rounds per trial.
struct SweepGrid {
  std::vector<double> betas{0.3, 0.5, 0.7};
  std::vector<double> mus{0.25, 0.5};
  std::vector<double> lambdas{0.05, 0.10, 0.15, 0.20, 0.30};
  std::vector<Strategy> strategies{Strategy::kNbnc, Strategy::kDeg};
  std::size_t n_trials = 50;
  std::size_t max_rounds = 20;
  std::uint64_t base_seed = 0;

  void validate() const;
  std::size_t conditions_per_network() const {
    return betas.size() * mus.size() * lambdas.size() * strategies.size();
  }
};

struct SweepRecord {
  std::string network;
  double beta = 0.0;
  double mu = 0.0;
  double lambda = 0.0;
  Strategy strategy = Strategy::kNbnc;
  double avg_infected_fraction = 0.0;  // mean over trials of avg_infected_per_round / N
  double std_error = 0.0;              // standard error of that mean; not exported
  std::size_t n_trials = 0;
};

struct RatioRecord {
  std::string network;
  double beta = 0.0;
  double mu = 0.0;
  double lambda = 0.0;
  std::optional<double> ratio;  // DEG / NBNC; empty when the NBNC fraction is 0

  bool defined() const noexcept { return ratio.has_value(); }
};

struct RatioSummary {
  double beta = 0.0;
  double mu = 0.0;
  double lambda = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t n_defined = 0;
};

struct ConditionKey {
  double beta = 0.0;
  double mu = 0.0;
  double lambda = 0.0;

  bool operator==(const ConditionKey&) const = default;
};

struct SummaryReport {
  std::vector<RatioSummary> summaries;
  std::vector<ConditionKey> excluded;  // groups with no defined ratio
};

/// Seed of one (network, beta, mu, lambda) condition. Both strategies share
/// it so their trials are paired on common random numbers.
std::uint64_t condition_seed(std::uint64_t base_seed, std::size_t network_index,
                             std::size_t condition_index);

/// One record per network x beta x mu x lambda x strategy, in that nesting
/// order. Cells may run on `jobs` worker threads; output does not depend on
/// the schedule.
std::vector<SweepRecord> run_sweep(std::span<const Network> registry, const SweepGrid& grid,
                                   unsigned jobs = 1);

/// Pairs the DEG and NBNC record of every (network, beta, mu, lambda) cell.
/// DataError naming the cell when either strategy is missing.
std::vector<RatioRecord> compute_ratios(std::span<const SweepRecord> records);

/// Order statistics of the defined ratios per (beta, mu, lambda) across
/// networks. Quartiles use linear interpolation between order statistics.
SummaryReport summarize_ratios(std::span<const RatioRecord> ratios);

/// Linear-interpolation quantile of an ascending sample, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

}  // namespace nbnc
