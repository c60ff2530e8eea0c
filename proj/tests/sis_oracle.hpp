// Exact distribution of the state after initialization plus one round,
// obtained by enumerating every Bernoulli outcome: one per non-vaccinated
// node at start, one per infected node in recovery, one per
// (infected, susceptible) link in transmission.
#pragma once

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nbnc/graph.hpp"

namespace nbnc::testing {

// 'S', 'I', 'V' per node.
using StateKey = std::string;

class OneRoundOracle {
 public:
  OneRoundOracle(const Graph& g, std::set<NodeId> vaccinated, double beta, double mu)
      : g_(g), vaccinated_(std::move(vaccinated)), beta_(beta), mu_(mu) {}

  std::map<StateKey, double> distribution() {
    dist_.clear();
    StateKey start(g_.node_count(), 'S');
    for (NodeId v : vaccinated_) start[v] = 'V';
    initialize(start, 0, 1.0);
    return dist_;
  }

 private:
  void initialize(StateKey& s, NodeId v, double p) {
    if (v == s.size()) {
      recover(s, 0, p);
      return;
    }
    if (s[v] == 'V') {
      initialize(s, v + 1, p);
      return;
    }
    s[v] = 'I';
    initialize(s, v + 1, p * beta_);
    s[v] = 'S';
    initialize(s, v + 1, p * (1.0 - beta_));
  }

  void recover(StateKey& s, NodeId v, double p) {
    if (v == s.size()) {
      std::vector<std::pair<NodeId, NodeId>> links;
      for (NodeId u = 0; u < s.size(); ++u) {
        if (s[u] != 'I') continue;
        for (NodeId w : g_.neighbors(u))
          if (s[w] == 'S') links.emplace_back(u, w);
      }
      std::vector<bool> hit(s.size(), false);
      transmit(s, links, 0, hit, p);
      return;
    }
    if (s[v] != 'I') {
      recover(s, v + 1, p);
      return;
    }
    s[v] = 'S';
    recover(s, v + 1, p * mu_);
    s[v] = 'I';
    recover(s, v + 1, p * (1.0 - mu_));
  }

  void transmit(const StateKey& s, const std::vector<std::pair<NodeId, NodeId>>& links,
                std::size_t k, std::vector<bool>& hit, double p) {
    if (p == 0.0) return;
    if (k == links.size()) {
      StateKey out = s;
      for (NodeId w = 0; w < s.size(); ++w)
        if (hit[w]) out[w] = 'I';
      dist_[out] += p;
      return;
    }
    NodeId w = links[k].second;
    bool before = hit[w];
    hit[w] = true;
    transmit(s, links, k + 1, hit, p * beta_);
    hit[w] = before;
    transmit(s, links, k + 1, hit, p * (1.0 - beta_));
  }

  Graph g_;
  std::set<NodeId> vaccinated_;
  double beta_;
  double mu_;
  std::map<StateKey, double> dist_;
};

}  // namespace nbnc::testing
