#include "nbnc/centrality.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "nbnc/error.hpp"
#include "nbnc/spectral.hpp"

namespace nbnc {

std::string_view to_string(Strategy s) { return s == Strategy::kNbnc ? "NBNC" : "DEG"; }

Strategy parse_strategy(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "nbnc") return Strategy::kNbnc;
  if (lower == "deg") return Strategy::kDeg;
  throw ArgumentError("unknown strategy '" + std::string(text) + "' (expected nbnc or deg)");
}

NbncTuple nbnc_tuple(const Graph& g, NodeId v) {
  Graph hood = neighborhood_graph(g, v);
  NbncTuple t;
  t.degree = hood.node_count();
  t.components = connected_components(hood).component_count;
  if (t.components == 1 && t.degree >= 2) t.acr = algebraic_connectivity_ratio(hood);
  return t;
}

std::vector<NbncTuple> nbnc_tuples(const Graph& g) {
  std::vector<NbncTuple> out;
  out.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out.push_back(nbnc_tuple(g, v));
  return out;
}

std::weak_ordering compare_nbnc(const NbncTuple& a, const NbncTuple& b) {
  if (a.components != b.components) {
    return a.components > b.components ? std::weak_ordering::greater
                                       : std::weak_ordering::less;
  }
  if (std::abs(a.acr - b.acr) > kAcrTolerance) {
    return a.acr < b.acr ? std::weak_ordering::greater : std::weak_ordering::less;
  }
  if (a.degree != b.degree) {
    return a.degree > b.degree ? std::weak_ordering::greater : std::weak_ordering::less;
  }
  return std::weak_ordering::equivalent;
}

std::vector<std::size_t> degree_centrality(const Graph& g) {
  std::vector<std::size_t> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out[v] = degree(g, v);
  return out;
}

namespace {

template <typename Compare>
Ranking rank_by(std::size_t n, Compare compare) {
  Ranking r;
  r.order.resize(n);
  std::iota(r.order.begin(), r.order.end(), NodeId{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](NodeId a, NodeId b) { return compare(a, b) > 0; });
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || compare(r.order[i - 1], r.order[i]) != 0) r.tie_groups.emplace_back();
    r.tie_groups.back().push_back(r.order[i]);
  }
  return r;
}

}  // namespace

Ranking rank_nodes(const Graph& g, Strategy strategy) {
  if (strategy == Strategy::kDeg) {
    auto deg = degree_centrality(g);
    return rank_by(g.node_count(),
                   [&](NodeId a, NodeId b) { return deg[a] <=> deg[b]; });
  }
  auto tuples = nbnc_tuples(g);
  return rank_by(g.node_count(), [&](NodeId a, NodeId b) {
    return compare_nbnc(tuples[a], tuples[b]);
  });
}

std::size_t vaccinee_count(std::size_t node_count, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ArgumentError("vaccination fraction must lie in [0, 1], got " +
                        std::to_string(lambda));
  }
  // The epsilon absorbs products such as 0.15 * 30 landing just below x.5.
  double k = std::floor(lambda * static_cast<double>(node_count) + 0.5 + 1e-9);
  return std::min(node_count, static_cast<std::size_t>(k));
}

std::vector<NodeId> select_vaccinees(const Ranking& ranking, double lambda) {
  std::size_t k = vaccinee_count(ranking.order.size(), lambda);
  std::vector<NodeId> chosen(ranking.order.begin(), ranking.order.begin() + k);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<NodeId> select_vaccinees(const Graph& g, Strategy strategy, double lambda) {
  vaccinee_count(g.node_count(), lambda);  // validate before ranking
  return select_vaccinees(rank_nodes(g, strategy), lambda);
}

}  // namespace nbnc
