// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Every tolerance and budget is a named constant here.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nbnc/centrality.hpp"
#include "nbnc/experiment.hpp"
#include "nbnc/graph.hpp"
#include "nbnc/sis.hpp"
#include "nbnc/spectral.hpp"
#include "sis_oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace nbnc;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kZeroMultiplicityTol = 1e-6;
constexpr double kTraceTolPerNode = 1e-8;
constexpr double kNegativeEigenTol = -1e-9;
constexpr double kSpectralBudgetSec = 5.0;
constexpr std::size_t kSpectralGraphs = 200;
constexpr std::size_t kSpectralMaxNodes = 12;

constexpr double kAcrTol = 1e-9;

constexpr std::size_t kRankGraphs = 100;
constexpr std::size_t kRankMaxNodes = 10;

constexpr std::size_t kOneRoundTrials = 100000;
constexpr double kOneRoundSigmas = 4.0;
constexpr double kOneRoundBudgetSec = 30.0;

constexpr std::size_t kMonotoneTrials = 1000;

constexpr double kRatioBandLo = 1.0;
constexpr double kRatioBandHi = 1.4;
constexpr double kKarateBudgetSec = 10.0;
constexpr std::uint64_t kKarateSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome spectral_suite() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937_64 rng(12345);
  std::size_t failures = 0;
  double worst_trace = 0.0;
  for (std::size_t i = 0; i < kSpectralGraphs; ++i) {
    Graph g = testing::random_small_graph(rng, 1, kSpectralMaxNodes);
    SymmetricMatrix l = laplacian(g);
    Spectrum s = eigenvalues(l);
    std::size_t zeros = std::count_if(s.values.begin(), s.values.end(),
                                      [](double x) { return std::abs(x) <= kZeroMultiplicityTol; });
    double sum = std::accumulate(s.values.begin(), s.values.end(), 0.0);
    double trace_err = std::abs(sum - l.trace());
    worst_trace = std::max(worst_trace, trace_err / static_cast<double>(g.node_count()));
    bool ok = zeros == testing::closure_components(g).count &&
              trace_err <= kTraceTolPerNode * static_cast<double>(g.node_count()) &&
              std::all_of(s.values.begin(), s.values.end(),
                          [](double x) { return x >= kNegativeEigenTol; });
    if (!ok) ++failures;
  }
  double elapsed = seconds_since(t0);
  o.pass = failures == 0 && elapsed < kSpectralBudgetSec;
  std::ostringstream d;
  d << kSpectralGraphs << " graphs, " << failures << " failures, worst trace err/n "
    << worst_trace << ", " << elapsed << " s";
  o.detail = d.str();
  return o;
}

Outcome closed_forms() {
  Outcome o;
  std::ostringstream d;
  auto check = [&](const std::string& label, const NbncTuple& t, std::size_t comps, double acr,
                   std::size_t degree) {
    bool ok = t.components == comps && std::abs(t.acr - acr) <= kAcrTol && t.degree == degree;
    if (!ok) {
      o.pass = false;
      d << label << " got (" << t.components << ", " << t.acr << ", " << t.degree << ") ";
    }
  };
  for (std::size_t k = 1; k <= 8; ++k)
    check("S" + std::to_string(k), nbnc_tuple(testing::star(k), 0), k, 0.0, k);
  for (std::size_t n = 3; n <= 9; ++n) {
    Graph g = testing::complete(n);
    for (NodeId v = 0; v < n; ++v)
      check("K" + std::to_string(n), nbnc_tuple(g, v), 1, 1.0, n - 1);
  }
  Graph c5 = testing::cycle(5);
  for (NodeId v = 0; v < 5; ++v) check("C5", nbnc_tuple(c5, v), 2, 0.0, 2);
  o.detail = o.pass ? "S_1..S_8, K_3..K_9, C5" : d.str();
  return o;
}

// Rank by the number of strictly better nodes; equivalent nodes share it.
Ranking pairwise_oracle(const Graph& g) {
  auto tuples = nbnc_tuples(g);
  std::size_t n = g.node_count();
  std::vector<std::size_t> better(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (compare_nbnc(tuples[b], tuples[a]) > 0) ++better[a];
  Ranking r;
  for (NodeId v = 0; v < n; ++v) r.order.push_back(v);
  std::sort(r.order.begin(), r.order.end(), [&](NodeId x, NodeId y) {
    return better[x] != better[y] ? better[x] < better[y] : x < y;
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || better[r.order[i]] != better[r.order[i - 1]]) r.tie_groups.emplace_back();
    r.tie_groups.back().push_back(r.order[i]);
  }
  return r;
}

Outcome ranking_oracle() {
  Outcome o;
  std::mt19937_64 rng(777);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < kRankGraphs; ++i) {
    Graph g = testing::random_small_graph(rng, 1, kRankMaxNodes);
    Ranking got = rank_nodes(g, Strategy::kNbnc);
    Ranking want = pairwise_oracle(g);
    if (got.order != want.order || got.tie_groups != want.tie_groups) ++mismatches;
  }
  o.pass = mismatches == 0;
  o.detail = std::to_string(kRankGraphs) + " graphs, " + std::to_string(mismatches) + " mismatches";
  return o;
}

std::string state_key(const StateVector& s) {
  std::string k;
  for (NodeState x : s)
    k.push_back(x == NodeState::kInfected ? 'I' : x == NodeState::kVaccinated ? 'V' : 'S');
  return k;
}

Outcome one_round_distribution() {
  Outcome o;
  auto t0 = Clock::now();
  const double beta = 0.5, mu = 0.5;
  std::ostringstream d;
  std::size_t cases = 0, states = 0;
  double worst_sigma = 0.0;
  struct Case {
    std::string name;
    Graph g;
  };
  std::vector<Case> graphs{{"P3", testing::path(3)}, {"S4", testing::star(4)}};
  std::uint64_t seed = 31;
  for (const auto& [name, g] : graphs) {
    NodeId top = rank_nodes(g, Strategy::kNbnc).order.front();
    for (bool vaccinate : {false, true}) {
      std::vector<NodeId> vacc;
      if (vaccinate) vacc.push_back(top);
      auto exact = testing::OneRoundOracle(g, std::set<NodeId>(vacc.begin(), vacc.end()), beta, mu)
                       .distribution();
      std::map<std::string, std::size_t> counts;
      ++seed;
      for (std::size_t t = 0; t < kOneRoundTrials; ++t) {
        RandomStream rng = make_stream(seed, t);
        StateVector s = initialize(g, vacc, beta, rng);
        phase_recovery(s, mu, rng);
        phase_infection(g, s, beta, rng);
        ++counts[state_key(s)];
      }
      ++cases;
      for (const auto& [key, n] : counts) {
        if (!exact.count(key)) {
          o.pass = false;
          d << name << ": impossible state " << key << "; ";
        }
      }
      for (const auto& [key, p] : exact) {
        ++states;
        double freq = static_cast<double>(counts[key]) / kOneRoundTrials;
        double se = std::sqrt(p * (1.0 - p) / kOneRoundTrials);
        double sigma = se > 0.0 ? std::abs(freq - p) / se : (freq == p ? 0.0 : INFINITY);
        worst_sigma = std::max(worst_sigma, sigma);
        if (sigma > kOneRoundSigmas) {
          o.pass = false;
          d << name << (vaccinate ? "+vacc" : "") << " state " << key << " off by " << sigma
            << " SE; ";
        }
      }
    }
  }
  double elapsed = seconds_since(t0);
  if (elapsed >= kOneRoundBudgetSec) o.pass = false;
  d << cases << " cases, " << states << " states, worst " << worst_sigma << " SE, " << elapsed
    << " s";
  o.detail = d.str();
  return o;
}

Outcome degenerate_parameters() {
  Outcome o;
  std::ostringstream d;
  Graph karate = testing::load_fixture("karate.edges");
  auto all = select_vaccinees(karate, Strategy::kNbnc, 1.0);
  for (const auto& r : run_trials(karate, SimConfig{0.7, 0.25, 20, 0}, all, 100, 1)) {
    if (r.avg_infected_per_round != 0.0) {
      o.pass = false;
      d << "lambda=1 nonzero; ";
      break;
    }
  }
  auto some = select_vaccinees(karate, Strategy::kDeg, 0.1);
  for (const auto& r : run_trials(karate, SimConfig{0.0, 0.25, 20, 0}, some, 100, 2)) {
    if (r.avg_infected_per_round != 0.0) {
      o.pass = false;
      d << "beta=0 nonzero; ";
      break;
    }
  }
  std::size_t violations = 0;
  for (std::size_t t = 0; t < kMonotoneTrials; ++t) {
    SimConfig c{0.3, 0.0, 20, stream_seed(3, t)};
    StateVector prev;
    run_simulation(karate, c, some, [&](std::size_t, const StateVector& s) {
      if (!prev.empty()) {
        for (std::size_t v = 0; v < s.size(); ++v)
          if (prev[v] == NodeState::kInfected && s[v] != NodeState::kInfected) ++violations;
      }
      prev = s;
    });
  }
  if (violations) o.pass = false;
  d << "lambda=1 and beta=0 over 100 trials each; mu=0 monotone over " << kMonotoneTrials
    << " trials, " << violations << " violations";
  o.detail = d.str();
  return o;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(NBNC_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_determinism() {
  Outcome o;
  fs::path root = fs::path(NBNC_SCRATCH);
  std::string manifest = std::string(NBNC_TEST_DATA) + "/fixtures.manifest";
  std::vector<fs::path> dirs{root / "run_a", root / "run_b"};
  for (const auto& dir : dirs) {
    fs::remove_all(dir);
    int code = run_cli("sweep " + manifest + " --seed 4242 --trials 25 --out " + dir.string());
    if (code != 0) {
      o.pass = false;
      o.detail = "sweep exited " + std::to_string(code);
      return o;
    }
  }
  for (const char* name : {"records.csv", "ratios.csv", "summary.csv"}) {
    std::string a = testing::slurp((dirs[0] / name).string());
    std::string b = testing::slurp((dirs[1] / name).string());
    if (a.empty() || a != b) {
      o.pass = false;
      o.detail += std::string(name) + " differs; ";
    }
  }
  if (o.pass) o.detail = "records/ratios/summary byte-identical across two runs";
  return o;
}

Outcome karate_reproduction() {
  Outcome o;
  std::vector<Network> registry{{"karate", testing::load_fixture("karate.edges")}};
  SweepGrid grid;
  grid.base_seed = kKarateSeed;
  auto t0 = Clock::now();
  auto records = run_sweep(registry, grid);
  double elapsed = seconds_since(t0);
  auto ratios = compute_ratios(records);
  std::size_t paired = 0, nbnc_wins = 0;
  std::vector<double> defined;
  for (std::size_t i = 0; i + 1 < records.size(); i += 2) {
    const auto& a = records[i];
    const auto& b = records[i + 1];
    const auto& nb = a.strategy == Strategy::kNbnc ? a : b;
    const auto& dg = a.strategy == Strategy::kNbnc ? b : a;
    ++paired;
    if (nb.avg_infected_fraction <= dg.avg_infected_fraction) ++nbnc_wins;
  }
  for (const auto& r : ratios)
    if (r.defined()) defined.push_back(*r.ratio);
  std::sort(defined.begin(), defined.end());
  double median = defined.empty() ? NAN : quantile_sorted(defined, 0.5);
  o.pass = paired == 30 && 2 * nbnc_wins > paired && median >= kRatioBandLo &&
           median <= kRatioBandHi && elapsed < kKarateBudgetSec;
  std::ostringstream d;
  d << "NBNC<=DEG in " << nbnc_wins << "/" << paired << ", median DEG/NBNC " << median << " over "
    << defined.size() << " defined cells, " << elapsed << " s";
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"1 spectral invariants on random graphs", spectral_suite},
      {"2 NBNC closed-form tuples", closed_forms},
      {"3 rank_nodes equals pairwise comparator oracle", ranking_oracle},
      {"4 one-round SIS distribution matches enumeration", one_round_distribution},
      {"5 degenerate-parameter guarantees", degenerate_parameters},
      {"6 sweep CLI determinism", cli_determinism},
      {"7 karate full-grid qualitative reproduction", karate_reproduction},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << o.detail << std::endl;
  }
  std::cout << "[N/A]  8 worked ten-node example averages: excluded, topology and draws "
               "unpublished; round semantics covered by 4 and 5"
            << std::endl;
  std::cout << (failed ? "acceptance: FAILED " : "acceptance: all passed ") << failed << std::endl;
  return failed ? 1 : 0;
}
