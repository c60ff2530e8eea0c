#include "nbnc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "nbnc/error.hpp"
#include "nbnc/random.hpp"
#include "nbnc/sis.hpp"

namespace nbnc {

namespace {

void check_probabilities(const std::vector<double>& values, const char* name) {
  if (values.empty()) throw ArgumentError(std::string("grid has no ") + name + " values");
  for (double p : values) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ArgumentError(std::string(name) + " value " + std::to_string(p) +
                          " outside [0, 1]");
    }
  }
}

std::string describe(const std::string& network, double beta, double mu, double lambda) {
  std::ostringstream os;
  os << "network=" << network << " beta=" << beta << " mu=" << mu << " lambda=" << lambda;
  return os.str();
}

struct CellJob {
  std::size_t network;
  std::size_t beta;
  std::size_t mu;
  std::size_t lambda;
  std::size_t strategy;
};

}  // namespace

void SweepGrid::validate() const {
  check_probabilities(betas, "beta");
  check_probabilities(mus, "mu");
  check_probabilities(lambdas, "lambda");
  if (strategies.empty()) throw ArgumentError("grid has no strategies");
  if (n_trials < 1) throw ArgumentError("n_trials must be at least 1");
  if (max_rounds < 1) throw ArgumentError("max_rounds must be at least 1");
}

std::uint64_t condition_seed(std::uint64_t base_seed, std::size_t network_index,
                             std::size_t condition_index) {
  return stream_seed(stream_seed(base_seed, network_index), condition_index);
}

std::vector<SweepRecord> run_sweep(std::span<const Network> registry, const SweepGrid& grid,
                                   unsigned jobs) {
  if (registry.empty()) throw ArgumentError("network registry is empty");
  grid.validate();

  // vaccinees[network][strategy][lambda]
  std::vector<std::vector<std::vector<std::vector<NodeId>>>> vaccinees(registry.size());
  for (std::size_t n = 0; n < registry.size(); ++n) {
    for (Strategy s : grid.strategies) {
      Ranking ranking = rank_nodes(registry[n].graph, s);
      auto& per_lambda = vaccinees[n].emplace_back();
      for (double lambda : grid.lambdas) per_lambda.push_back(select_vaccinees(ranking, lambda));
    }
  }

  std::vector<CellJob> cells;
  cells.reserve(registry.size() * grid.conditions_per_network());
  for (std::size_t n = 0; n < registry.size(); ++n)
    for (std::size_t b = 0; b < grid.betas.size(); ++b)
      for (std::size_t m = 0; m < grid.mus.size(); ++m)
        for (std::size_t l = 0; l < grid.lambdas.size(); ++l)
          for (std::size_t s = 0; s < grid.strategies.size(); ++s)
            cells.push_back({n, b, m, l, s});

  std::vector<SweepRecord> records(cells.size());
  auto run_cell = [&](std::size_t index) {
    const CellJob& c = cells[index];
    const Network& net = registry[c.network];
    SimConfig config;
    config.beta = grid.betas[c.beta];
    config.mu = grid.mus[c.mu];
    config.max_rounds = grid.max_rounds;
    std::size_t condition = (c.beta * grid.mus.size() + c.mu) * grid.lambdas.size() + c.lambda;
    auto results = run_trials(net.graph, config, vaccinees[c.network][c.strategy][c.lambda],
                              grid.n_trials, condition_seed(grid.base_seed, c.network, condition));

    const double n_nodes = static_cast<double>(net.graph.node_count());
    std::vector<double> fractions;
    fractions.reserve(results.size());
    for (const auto& r : results) {
      fractions.push_back(n_nodes > 0 ? r.avg_infected_per_round / n_nodes : 0.0);
    }
    double mean = 0.0;
    for (double f : fractions) mean += f;
    mean /= static_cast<double>(fractions.size());
    double ss = 0.0;
    for (double f : fractions) ss += (f - mean) * (f - mean);
    double std_error = 0.0;
    if (fractions.size() > 1) {
      std_error = std::sqrt(ss / static_cast<double>(fractions.size() - 1) /
                            static_cast<double>(fractions.size()));
    }

    SweepRecord& rec = records[index];
    rec.network = net.name;
    rec.beta = config.beta;
    rec.mu = config.mu;
    rec.lambda = grid.lambdas[c.lambda];
    rec.strategy = grid.strategies[c.strategy];
    rec.avg_infected_fraction = mean;
    rec.std_error = std_error;
    rec.n_trials = grid.n_trials;
  };

  unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
          try {
            run_cell(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = cells.size();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<RatioRecord> compute_ratios(std::span<const SweepRecord> records) {
  struct Pair {
    RatioRecord key;
    const SweepRecord* nbnc = nullptr;
    const SweepRecord* deg = nullptr;
  };
  std::vector<Pair> cells;
  for (const auto& r : records) {
    auto it = std::find_if(cells.begin(), cells.end(), [&](const Pair& p) {
      return p.key.network == r.network && p.key.beta == r.beta && p.key.mu == r.mu &&
             p.key.lambda == r.lambda;
    });
    if (it == cells.end()) {
      it = cells.insert(cells.end(), Pair{{r.network, r.beta, r.mu, r.lambda, {}}});
    }
    auto& slot = r.strategy == Strategy::kNbnc ? it->nbnc : it->deg;
    if (slot) {
      throw DataError("duplicate " + std::string(to_string(r.strategy)) + " record for " +
                      describe(r.network, r.beta, r.mu, r.lambda));
    }
    slot = &r;
  }

  std::vector<RatioRecord> out;
  out.reserve(cells.size());
  for (auto& cell : cells) {
    const auto& k = cell.key;
    if (!cell.nbnc || !cell.deg) {
      throw DataError(std::string("missing ") + (cell.nbnc ? "DEG" : "NBNC") + " record for " +
                      describe(k.network, k.beta, k.mu, k.lambda));
    }
    RatioRecord rec = k;
    if (cell.nbnc->avg_infected_fraction > 0.0) {
      rec.ratio = cell.deg->avg_infected_fraction / cell.nbnc->avg_infected_fraction;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw ArgumentError("quantile of an empty sample");
  double pos = q * static_cast<double>(sorted.size() - 1);
  auto lo = static_cast<std::size_t>(std::floor(pos));
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

SummaryReport summarize_ratios(std::span<const RatioRecord> ratios) {
  std::vector<std::pair<ConditionKey, std::vector<double>>> groups;
  for (const auto& r : ratios) {
    ConditionKey key{r.beta, r.mu, r.lambda};
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == key; });
    if (it == groups.end()) it = groups.insert(groups.end(), {key, {}});
    if (r.ratio) it->second.push_back(*r.ratio);
  }

  SummaryReport report;
  for (auto& [key, values] : groups) {
    if (values.empty()) {
      report.excluded.push_back(key);
      continue;
    }
    std::sort(values.begin(), values.end());
    RatioSummary s;
    s.beta = key.beta;
    s.mu = key.mu;
    s.lambda = key.lambda;
    s.median = quantile_sorted(values, 0.5);
    s.q1 = quantile_sorted(values, 0.25);
    s.q3 = quantile_sorted(values, 0.75);
    s.min = values.front();
    s.max = values.back();
    s.n_defined = values.size();
    report.summaries.push_back(s);
  }
  return report;
}

}  // namespace nbnc
