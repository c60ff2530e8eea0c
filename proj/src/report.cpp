#include "nbnc/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "nbnc/error.hpp"

namespace nbnc {

namespace {

constexpr std::string_view kRecordsHeader =
    "network,beta,mu,lambda,strategy,avg_infected_fraction,n_trials";

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t row, const char* column) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw DataError("row " + std::to_string(row) + ": bad " + column + " value '" +
                    std::string(field) + "'");
  }
  return value;
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kRecordsHeader << '\n';
  for (const auto& r : records) {
    out << r.network << ',' << fixed6(r.beta) << ',' << fixed6(r.mu) << ',' << fixed6(r.lambda)
        << ',' << to_string(r.strategy) << ',' << fixed6(r.avg_infected_fraction) << ','
        << r.n_trials << '\n';
  }
}

void write_ratios_csv(std::ostream& out, std::span<const RatioRecord> ratios) {
  out << "network,beta,mu,lambda,ratio,defined\n";
  for (const auto& r : ratios) {
    out << r.network << ',' << fixed6(r.beta) << ',' << fixed6(r.mu) << ',' << fixed6(r.lambda)
        << ',' << (r.ratio ? fixed6(*r.ratio) : "NA") << ',' << (r.ratio ? 1 : 0) << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const RatioSummary> summaries) {
  out << "beta,mu,lambda,median,q1,q3,min,max,n_defined\n";
  for (const auto& s : summaries) {
    out << fixed6(s.beta) << ',' << fixed6(s.mu) << ',' << fixed6(s.lambda) << ','
        << fixed6(s.median) << ',' << fixed6(s.q1) << ',' << fixed6(s.q3) << ','
        << fixed6(s.min) << ',' << fixed6(s.max) << ',' << s.n_defined << '\n';
  }
}

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

std::vector<SweepRecord> read_records_csv(std::istream& in) {
  std::vector<SweepRecord> records;
  std::string line;
  std::size_t row = 0;
  if (!std::getline(in, line)) throw DataError("row 1: missing header");
  ++row;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRecordsHeader) {
    throw DataError("row 1: expected header '" + std::string(kRecordsHeader) + "'");
  }
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = split(line, ',');
    if (f.size() != 7) {
      throw DataError("row " + std::to_string(row) + ": expected 7 fields, got " +
                      std::to_string(f.size()));
    }
    SweepRecord r;
    r.network = std::string(f[0]);
    if (r.network.empty()) throw DataError("row " + std::to_string(row) + ": empty network");
    r.beta = parse_number<double>(f[1], row, "beta");
    r.mu = parse_number<double>(f[2], row, "mu");
    r.lambda = parse_number<double>(f[3], row, "lambda");
    try {
      r.strategy = parse_strategy(f[4]);
    } catch (const ArgumentError&) {
      throw DataError("row " + std::to_string(row) + ": bad strategy '" + std::string(f[4]) +
                      "'");
    }
    r.avg_infected_fraction = parse_number<double>(f[5], row, "avg_infected_fraction");
    if (!(r.avg_infected_fraction >= 0.0 && r.avg_infected_fraction <= 1.0)) {
      throw DataError("row " + std::to_string(row) + ": avg_infected_fraction outside [0, 1]");
    }
    r.n_trials = parse_number<std::size_t>(f[6], row, "n_trials");
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace nbnc
