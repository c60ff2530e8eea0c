// nbnc: rank nodes, pick vaccinees, run SIS trials and parameter sweeps.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nbnc/centrality.hpp"
#include "nbnc/error.hpp"
#include "nbnc/experiment.hpp"
#include "nbnc/graph.hpp"
#include "nbnc/heatmap.hpp"
#include "nbnc/manifest.hpp"
#include "nbnc/random.hpp"
#include "nbnc/report.hpp"
#include "nbnc/sis.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kNumeric = 3 };

// Thrown for invalid flag combinations detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_probability(double p, const char* flag) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw UsageError(std::string(flag) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

nbnc::Strategy strategy_flag(const std::string& text) {
  try {
    return nbnc::parse_strategy(text);
  } catch (const nbnc::ArgumentError& e) {
    throw UsageError(e.what());
  }
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

struct RankArgs {
  std::string graph;
  std::string strategy = "nbnc";
};

void cmd_rank(const RankArgs& a) {
  auto strategy = strategy_flag(a.strategy);
  auto g = nbnc::read_edge_list(a.graph);
  auto tuples = nbnc::nbnc_tuples(g);
  auto ranking = nbnc::rank_nodes(g, strategy);
  for (std::size_t group = 0; group < ranking.tie_groups.size(); ++group) {
    for (nbnc::NodeId v : ranking.tie_groups[group]) {
      const auto& t = tuples[v];
      std::cout << v << ' ' << t.components << ' ' << fixed6(t.acr) << ' ' << t.degree << ' '
                << group << '\n';
    }
  }
}

struct VaccinateArgs {
  std::string graph;
  std::string strategy = "nbnc";
  double lambda = 0.0;
};

void cmd_vaccinate(const VaccinateArgs& a) {
  auto strategy = strategy_flag(a.strategy);
  require_probability(a.lambda, "--lambda");
  auto g = nbnc::read_edge_list(a.graph);
  auto chosen = nbnc::select_vaccinees(g, strategy, a.lambda);
  std::cout << chosen.size() << '\n';
  for (std::size_t i = 0; i < chosen.size(); ++i) std::cout << (i ? " " : "") << chosen[i];
  std::cout << '\n';
}

struct SimulateArgs {
  std::string graph;
  std::string strategy = "nbnc";
  double beta = 0.0;
  double mu = 0.0;
  double lambda = 0.0;
  std::size_t trials = 50;
  std::size_t rounds = 20;
  std::optional<std::uint64_t> seed;
};

void cmd_simulate(const SimulateArgs& a) {
  auto strategy = strategy_flag(a.strategy);
  require_probability(a.beta, "--beta");
  require_probability(a.mu, "--mu");
  require_probability(a.lambda, "--lambda");
  if (a.trials < 1) throw UsageError("--trials must be at least 1");
  if (a.rounds < 1) throw UsageError("--rounds must be at least 1");
  std::uint64_t seed = a.seed.value_or(nbnc::entropy_seed());

  auto g = nbnc::read_edge_list(a.graph);
  auto vaccinees = nbnc::select_vaccinees(g, strategy, a.lambda);
  nbnc::SimConfig config;
  config.beta = a.beta;
  config.mu = a.mu;
  config.max_rounds = a.rounds;
  auto results = nbnc::run_trials(g, config, vaccinees, a.trials, seed);

  ordered_json header;
  header["config"] = {{"graph", a.graph},       {"nodes", g.node_count()},
                      {"strategy", nbnc::to_string(strategy)},
                      {"beta", a.beta},         {"mu", a.mu},
                      {"lambda", a.lambda},     {"vaccinees", vaccinees},
                      {"trials", a.trials},     {"rounds", a.rounds},
                      {"seed", seed}};
  std::cout << header.dump() << '\n';

  double sum = 0.0;
  for (std::size_t t = 0; t < results.size(); ++t) {
    const auto& r = results[t];
    ordered_json line;
    line["trial"] = t;
    line["rounds"] = r.rounds_executed();
    line["total_infected"] = r.total_infected;
    line["avg_infected_per_round"] = r.avg_infected_per_round;
    line["per_round"] = r.per_round_infected;
    std::cout << line.dump() << '\n';
    sum += r.avg_infected_per_round;
  }
  double mean = sum / static_cast<double>(results.size());
  double fraction = g.node_count() ? mean / static_cast<double>(g.node_count()) : 0.0;
  ordered_json summary;
  summary["summary"] = {{"trials", results.size()},
                        {"mean_avg_infected_per_round", mean},
                        {"avg_infected_fraction", fraction}};
  std::cout << summary.dump() << '\n';
}

struct SweepArgs {
  std::string manifest;
  std::vector<double> betas;
  std::vector<double> mus;
  std::vector<double> lambdas;
  std::vector<std::string> strategies;
  std::size_t trials = 50;
  std::size_t rounds = 20;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::string out = ".";
};

void cmd_sweep(const SweepArgs& a) {
  nbnc::SweepGrid grid;
  if (!a.betas.empty()) grid.betas = a.betas;
  if (!a.mus.empty()) grid.mus = a.mus;
  if (!a.lambdas.empty()) grid.lambdas = a.lambdas;
  if (!a.strategies.empty()) {
    grid.strategies.clear();
    for (const auto& s : a.strategies) grid.strategies.push_back(strategy_flag(s));
  }
  for (double p : grid.betas) require_probability(p, "--beta");
  for (double p : grid.mus) require_probability(p, "--mu");
  for (double p : grid.lambdas) require_probability(p, "--lambda");
  if (a.trials < 1) throw UsageError("--trials must be at least 1");
  if (a.rounds < 1) throw UsageError("--rounds must be at least 1");
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  grid.n_trials = a.trials;
  grid.max_rounds = a.rounds;
  grid.base_seed = a.seed.value_or(nbnc::entropy_seed());

  auto entries = nbnc::read_manifest(a.manifest);
  if (entries.empty()) throw UsageError("manifest '" + a.manifest + "' lists no networks");
  std::vector<std::string> warnings;
  auto networks = nbnc::load_networks(entries, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';

  auto records = nbnc::run_sweep(networks, grid, a.jobs);

  fs::path out_dir(a.out);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw nbnc::IoError(out_dir, ec.message());

  ordered_json info;
  info["seed"] = grid.base_seed;
  info["trials"] = grid.n_trials;
  info["rounds"] = grid.max_rounds;
  info["betas"] = grid.betas;
  info["mus"] = grid.mus;
  info["lambdas"] = grid.lambdas;
  std::vector<std::string> strategy_names;
  for (auto s : grid.strategies) strategy_names.emplace_back(nbnc::to_string(s));
  info["strategies"] = strategy_names;
  std::vector<std::string> network_names;
  for (const auto& n : networks) network_names.push_back(n.name);
  info["networks"] = network_names;
  nbnc::write_file(out_dir / "sweep_info.json",
                   [&](std::ostream& os) { os << info.dump(2) << '\n'; });

  nbnc::write_file(out_dir / "records.csv",
                   [&](std::ostream& os) { nbnc::write_records_csv(os, records); });

  bool paired = std::find(grid.strategies.begin(), grid.strategies.end(),
                          nbnc::Strategy::kNbnc) != grid.strategies.end() &&
                std::find(grid.strategies.begin(), grid.strategies.end(),
                          nbnc::Strategy::kDeg) != grid.strategies.end();
  if (paired) {
    auto ratios = nbnc::compute_ratios(records);
    auto summary = nbnc::summarize_ratios(ratios);
    for (const auto& k : summary.excluded) {
      std::cerr << "warning: no defined ratio for beta=" << k.beta << " mu=" << k.mu
                << " lambda=" << k.lambda << "; excluded from summary\n";
    }
    nbnc::write_file(out_dir / "ratios.csv",
                     [&](std::ostream& os) { nbnc::write_ratios_csv(os, ratios); });
    nbnc::write_file(out_dir / "summary.csv",
                     [&](std::ostream& os) { nbnc::write_summary_csv(os, summary.summaries); });
  }
  std::cerr << "seed " << grid.base_seed << ": wrote " << records.size() << " records to "
            << out_dir.string() << '\n';
}

struct ReportArgs {
  std::string records;
  std::string out;
};

void cmd_report(const ReportArgs& a) {
  std::ifstream in(a.records);
  if (!in) throw nbnc::IoError(a.records, "cannot open records CSV");
  auto records = nbnc::read_records_csv(in);
  if (records.empty()) throw nbnc::DataError("records CSV '" + a.records + "' has no rows");
  if (a.out.empty() || a.out == "-") {
    nbnc::write_heatmap_svg(std::cout, records);
  } else {
    nbnc::write_file(a.out, [&](std::ostream& os) { nbnc::write_heatmap_svg(os, records); });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bridge-node centrality vaccination and SIS epidemic experiments"};
  app.require_subcommand(1);

  RankArgs rank;
  auto* rank_cmd = app.add_subcommand("rank", "Rank nodes and print their NBNC tuples");
  rank_cmd->add_option("graph", rank.graph, "Edge-list file")->required();
  rank_cmd->add_option("--strategy", rank.strategy, "nbnc or deg")->capture_default_str();

  VaccinateArgs vacc;
  auto* vacc_cmd = app.add_subcommand("vaccinate", "Select the top-ranked fraction of nodes");
  vacc_cmd->add_option("graph", vacc.graph, "Edge-list file")->required();
  vacc_cmd->add_option("--strategy", vacc.strategy, "nbnc or deg")->capture_default_str();
  vacc_cmd->add_option("--lambda", vacc.lambda, "Fraction of nodes to vaccinate")->required();

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run seeded SIS trials, JSON lines out");
  sim_cmd->add_option("graph", sim.graph, "Edge-list file")->required();
  sim_cmd->add_option("--strategy", sim.strategy, "nbnc or deg")->capture_default_str();
  sim_cmd->add_option("--beta", sim.beta, "Infection probability")->required();
  sim_cmd->add_option("--mu", sim.mu, "Recovery probability")->required();
  sim_cmd->add_option("--lambda", sim.lambda, "Vaccinated fraction")->capture_default_str();
  sim_cmd->add_option("--trials", sim.trials, "Number of trials")->capture_default_str();
  sim_cmd->add_option("--rounds", sim.rounds, "Maximum rounds per trial")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Base seed (generated and echoed if omitted)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the operating-condition grid");
  sweep_cmd->add_option("manifest", sweep.manifest, "Manifest: name path expected_nodes")
      ->required();
  sweep_cmd->add_option("--beta", sweep.betas, "Comma list (default 0.3,0.5,0.7)")
      ->delimiter(',');
  sweep_cmd->add_option("--mu", sweep.mus, "Comma list (default 0.25,0.5)")->delimiter(',');
  sweep_cmd->add_option("--lambda", sweep.lambdas, "Comma list (default 0.05,...,0.30)")
      ->delimiter(',');
  sweep_cmd->add_option("--strategy", sweep.strategies, "Comma list (default nbnc,deg)")
      ->delimiter(',');
  sweep_cmd->add_option("--trials", sweep.trials, "Trials per cell")->capture_default_str();
  sweep_cmd->add_option("--rounds", sweep.rounds, "Maximum rounds")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Base seed (generated and echoed if omitted)");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Output directory")->capture_default_str();

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Render a records CSV as an SVG heat map");
  report_cmd->add_option("records", report.records, "records.csv from sweep")->required();
  report_cmd->add_option("--out", report.out, "SVG path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*rank_cmd) cmd_rank(rank);
    if (*vacc_cmd) cmd_vaccinate(vacc);
    if (*sim_cmd) cmd_simulate(sim);
    if (*sweep_cmd) cmd_sweep(sweep);
    if (*report_cmd) cmd_report(report);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const nbnc::ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const nbnc::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  } catch (const nbnc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return kOk;
}
