#include "nbnc/sis.hpp"

#include <algorithm>
#include <string>

#include "nbnc/error.hpp"

namespace nbnc {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ArgumentError(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

void SimConfig::validate() const {
  check_probability(beta, "beta");
  check_probability(mu, "mu");
  if (max_rounds < 1) throw ArgumentError("max_rounds must be at least 1");
}

StateVector initialize(const Graph& g, std::span<const NodeId> vaccinees, double beta,
                       RandomStream& rng) {
  StateVector states(g.node_count(), NodeState::kSusceptible);
  for (NodeId v : vaccinees) {
    if (v >= g.node_count()) {
      throw ArgumentError("vaccinee " + std::to_string(v) + " is not a node of the graph");
    }
    states[v] = NodeState::kVaccinated;
  }
  for (auto& s : states) {
    if (s == NodeState::kVaccinated) continue;
    if (rng.uniform() <= beta) s = NodeState::kInfected;
  }
  return states;
}

void phase_recovery(StateVector& states, double mu, RandomStream& rng) {
  for (auto& s : states) {
    if (s == NodeState::kInfected && rng.uniform() <= mu) s = NodeState::kSusceptible;
  }
}

void phase_infection(const Graph& g, StateVector& states, double beta, RandomStream& rng) {
  if (states.size() != g.node_count()) {
    throw ArgumentError("state vector size does not match the graph");
  }
  std::vector<NodeId> newly_infected;
  for (NodeId u = 0; u < states.size(); ++u) {
    if (states[u] != NodeState::kInfected) continue;
    for (NodeId w : g.neighbors(u)) {
      // states[] is untouched until the loop ends, so this reads entry state.
      if (states[w] != NodeState::kSusceptible) continue;
      if (rng.uniform() <= beta) newly_infected.push_back(w);
    }
  }
  for (NodeId w : newly_infected) states[w] = NodeState::kInfected;
}

std::size_t count_state(const StateVector& states, NodeState s) {
  return static_cast<std::size_t>(std::count(states.begin(), states.end(), s));
}

SimResult run_simulation(const Graph& g, const SimConfig& config,
                         std::span<const NodeId> vaccinees, const RoundObserver& observer) {
  config.validate();
  RandomStream rng(config.seed);
  StateVector states = initialize(g, vaccinees, config.beta, rng);

  SimResult result;
  while (result.rounds_executed() < config.max_rounds) {
    phase_recovery(states, config.mu, rng);
    if (count_state(states, NodeState::kInfected) == 0) break;
    phase_infection(g, states, config.beta, rng);
    std::size_t infected = count_state(states, NodeState::kInfected);
    result.per_round_infected.push_back(infected);
    result.total_infected += infected;
    if (observer) observer(result.rounds_executed(), states);
  }
  if (result.rounds_executed() > 0) {
    result.avg_infected_per_round = static_cast<double>(result.total_infected) /
                                    static_cast<double>(result.rounds_executed());
  }
  return result;
}

std::vector<SimResult> run_trials(const Graph& g, const SimConfig& config,
                                  std::span<const NodeId> vaccinees, std::size_t n_trials,
                                  std::uint64_t base_seed) {
  if (n_trials < 1) throw ArgumentError("n_trials must be at least 1");
  std::vector<SimResult> results;
  results.reserve(n_trials);
  SimConfig trial = config;
  for (std::size_t t = 0; t < n_trials; ++t) {
    trial.seed = stream_seed(base_seed, t);
    results.push_back(run_simulation(g, trial, vaccinees));
  }
  return results;
}

}  // namespace nbnc
