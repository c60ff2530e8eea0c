#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nbnc/graph.hpp"
#include "nbnc/random.hpp"

namespace nbnc {

enum class NodeState : std::uint8_t { kSusceptible, kInfected, kVaccinated };

using StateVector = std::vector<NodeState>;

struct SimConfig {
  double beta = 0.0;  // infection probability per infected-susceptible link
  double mu = 0.0;    // recovery probability per infected node and round
  std::size_t max_rounds = 20;
  std::uint64_t seed = 0;

  /// ArgumentError unless beta, mu in [0, 1] and max_rounds >= 1.
  void validate() const;
};

struct SimResult {
  std::vector<std::size_t> per_round_infected;  // infected count after each counted round
  std::size_t total_infected = 0;
  double avg_infected_per_round = 0.0;

  std::size_t rounds_executed() const noexcept { return per_round_infected.size(); }
};

// Every draw is u in [0, 1) and an event fires when u <= p, so p = 0 never
// fires and p = 1 always does.

/// Vaccinees become Vaccinated without consuming draws. Every other node,
/// in ascending ID order, draws once and starts Infected iff u <= beta.
StateVector initialize(const Graph& g, std::span<const NodeId> vaccinees, double beta,
                       RandomStream& rng);

/// Phase i: each Infected node (ascending ID) draws once and recovers to
/// Susceptible iff u <= mu.
void phase_recovery(StateVector& states, double mu, RandomStream& rng);

/// Phase ii: nodes Infected on entry transmit. For each such u (ascending)
/// and each neighbor w Susceptible on entry (ascending), one draw per link;
/// w becomes Infected if any of its draws is <= beta. Nodes infected during
/// this phase do not transmit until the next round.
void phase_infection(const Graph& g, StateVector& states, double beta, RandomStream& rng);

std::size_t count_state(const StateVector& states, NodeState s);

/// Called after every counted round with the 1-based round number.
using RoundObserver = std::function<void(std::size_t round, const StateVector& states)>;

/// Seeds RandomStream(config.seed), initializes, then repeats rounds:
/// phase i; stop (round not counted) if nobody is infected; phase ii;
/// record the infected count. Stops after config.max_rounds counted rounds.
SimResult run_simulation(const Graph& g, const SimConfig& config,
                         std::span<const NodeId> vaccinees,
                         const RoundObserver& observer = {});

/// Trial t runs with seed stream_seed(base_seed, t); config.seed is ignored.
std::vector<SimResult> run_trials(const Graph& g, const SimConfig& config,
                                  std::span<const NodeId> vaccinees, std::size_t n_trials,
                                  std::uint64_t base_seed);

}  // namespace nbnc
