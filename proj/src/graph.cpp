#include "nbnc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <string_view>

#include "nbnc/error.hpp"

namespace nbnc {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::string name) {
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw ArgumentError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") references a node outside [0, " +
                          std::to_string(node_count) + ")");
    }
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.name_ = std::move(name);
  g.offsets_.assign(node_count + 1, 0);
  g.targets_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.targets_.push_back(v);
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  return g;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  if (v >= node_count()) {
    throw ArgumentError("node " + std::to_string(v) + " out of range [0, " +
                        std::to_string(node_count()) + ")");
  }
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t b = 0;
  while (b < rest.size() && is_space(rest[b])) ++b;
  std::size_t e = b;
  while (e < rest.size() && !is_space(rest[e])) ++e;
  auto tok = rest.substr(b, e - b);
  rest.remove_prefix(e);
  return tok;
}

NodeId parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a nonnegative integer node ID, got '" +
                               std::string(tok) + "'");
  }
  // The largest representable ID must still leave room for node_count = id + 1.
  if (value >= std::numeric_limits<NodeId>::max()) {
    throw ParseError(line, "node ID " + std::string(tok) + " is too large");
  }
  return static_cast<NodeId>(value);
}

}  // namespace

Graph parse_edge_list(std::istream& in, std::string name) {
  std::vector<Edge> edges;
  std::size_t node_count = 0;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view rest = text;
    auto first = next_token(rest);
    if (first.empty() || first.front() == '#' || first.front() == '%') continue;
    auto second = next_token(rest);
    if (second.empty()) throw ParseError(line, "expected two node IDs");
    if (!next_token(rest).empty()) throw ParseError(line, "expected exactly two node IDs");
    NodeId u = parse_id(first, line);
    NodeId v = parse_id(second, line);
    node_count = std::max<std::size_t>(node_count, std::max(u, v) + std::size_t{1});
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(node_count, edges, std::move(name));
}

Graph read_edge_list(const std::filesystem::path& path, std::string name) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open edge list");
  return parse_edge_list(in, std::move(name));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph neighborhood_graph(const Graph& g, NodeId v) {
  auto members = g.neighbors(v);
  std::vector<Edge> edges;
  // members is sorted, so position in it is the relabeled ID.
  for (NodeId i = 0; i < members.size(); ++i) {
    for (NodeId w : g.neighbors(members[i])) {
      if (w <= members[i]) continue;
      auto it = std::lower_bound(members.begin(), members.end(), w);
      if (it != members.end() && *it == w) {
        edges.emplace_back(i, static_cast<NodeId>(it - members.begin()));
      }
    }
  }
  return Graph::from_edges(members.size(), edges);
}

ComponentLabeling connected_components(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  ComponentLabeling result;
  result.labels.assign(g.node_count(), kUnset);
  std::queue<NodeId> frontier;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (result.labels[s] != kUnset) continue;
    auto label = static_cast<std::uint32_t>(result.component_count++);
    result.labels[s] = label;
    frontier.push(s);
    while (!frontier.empty()) {
      NodeId u = frontier.front();
      frontier.pop();
      for (NodeId w : g.neighbors(u)) {
        if (result.labels[w] == kUnset) {
          result.labels[w] = label;
          frontier.push(w);
        }
      }
    }
  }
  return result;
}

std::size_t degree(const Graph& g, NodeId v) { return g.neighbors(v).size(); }

}  // namespace nbnc
