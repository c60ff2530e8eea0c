#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nbnc/graph.hpp"

namespace nbnc {

/// Neighborhood-based bridge node centrality of a single node.
struct NbncTuple {
  std::size_t components = 0;  // components of the neighborhood graph
  double acr = 0.0;            // algebraic connectivity ratio of the neighborhood graph
  std::size_t degree = 0;

  bool operator==(const NbncTuple&) const = default;
};

enum class Strategy { kNbnc, kDeg };

std::string_view to_string(Strategy s);
/// Accepts "nbnc" / "deg" in any case; ArgumentError otherwise.
Strategy parse_strategy(std::string_view text);

inline constexpr double kAcrTolerance = 1e-9;

/// Isolated nodes get (0, 0, 0). A degree-1 node has a single-vertex
/// neighborhood with no second eigenvalue; its ACR is 0 by convention.
NbncTuple nbnc_tuple(const Graph& g, NodeId v);
std::vector<NbncTuple> nbnc_tuples(const Graph& g);

/// `greater` means a ranks above b: more components first, then smaller ACR,
/// then larger degree. ACR values within kAcrTolerance compare equal.
std::weak_ordering compare_nbnc(const NbncTuple& a, const NbncTuple& b);

std::vector<std::size_t> degree_centrality(const Graph& g);

struct Ranking {
  std::vector<NodeId> order;                    // best first, ties by ascending ID
  std::vector<std::vector<NodeId>> tie_groups;  // equal-rank classes in rank order
};

Ranking rank_nodes(const Graph& g, Strategy strategy);

/// round_half_up(lambda * node_count). ArgumentError unless 0 <= lambda <= 1.
std::size_t vaccinee_count(std::size_t node_count, double lambda);

/// The first vaccinee_count(n, lambda) nodes of the ranking, returned in
/// ascending ID order.
std::vector<NodeId> select_vaccinees(const Graph& g, Strategy strategy, double lambda);

/// Same as select_vaccinees but reuses a ranking computed earlier.
std::vector<NodeId> select_vaccinees(const Ranking& ranking, double lambda);

}  // namespace nbnc
