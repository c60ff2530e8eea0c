#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "nbnc/experiment.hpp"

namespace nbnc {

// CSV schemas (header row first, reals fixed to 6 decimals):
//   records: network,beta,mu,lambda,strategy,avg_infected_fraction,n_trials
//   ratios:  network,beta,mu,lambda,ratio,defined      (ratio "NA" when undefined)
//   summary: beta,mu,lambda,median,q1,q3,min,max,n_defined
// Rows keep the order produced by run_sweep: network, beta, mu, lambda, strategy.

void write_records_csv(std::ostream& out, std::span<const SweepRecord> records);
void write_ratios_csv(std::ostream& out, std::span<const RatioRecord> ratios);
void write_summary_csv(std::ostream& out, std::span<const RatioSummary> summaries);

/// Opens `path`, runs `writer`, and reports any stream failure as IoError.
void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& writer);

/// Parses a records CSV. DataError names the 1-based row on malformed input.
std::vector<SweepRecord> read_records_csv(std::istream& in);

}  // namespace nbnc
