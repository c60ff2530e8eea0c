#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nbnc {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable simple undirected graph over dense node IDs [0, node_count).
///
/// Adjacency is stored in compressed rows; every row is strictly ascending,
/// and v appears in row u exactly when u appears in row v.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list. Self-loops are dropped,
  /// duplicates and reversed duplicates collapse to one edge.
  /// Throws ArgumentError if an endpoint is >= node_count.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::string name = {});

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  const std::string& name() const noexcept { return name_; }

  /// Sorted neighbor IDs of v. Throws ArgumentError when v is out of range.
  std::span<const NodeId> neighbors(NodeId v) const;

  bool has_edge(NodeId u, NodeId v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::string name_;
};

struct ComponentLabeling {
  std::vector<std::uint32_t> labels;
  std::size_t component_count = 0;
};

/// Reads `u v` pairs, one per line. Lines starting with '#' or '%' are
/// comments. node_count becomes 1 + the largest ID seen, so ID gaps turn
/// into isolated nodes. Throws ParseError carrying the offending line.
Graph parse_edge_list(std::istream& in, std::string name = {});

/// Opens and parses an edge-list file; IoError when it cannot be read.
Graph read_edge_list(const std::filesystem::path& path, std::string name = {});

/// Canonical form: one `u v` line per edge, u < v, sorted by (u, v).
void write_edge_list(std::ostream& out, const Graph& g);

/// Subgraph induced on the neighbors of v (v excluded), relabeled
/// 0..deg(v)-1 in ascending original-ID order.
Graph neighborhood_graph(const Graph& g, NodeId v);

/// Labels are assigned in order of each component's lowest node ID.
ComponentLabeling connected_components(const Graph& g);

std::size_t degree(const Graph& g, NodeId v);

}  // namespace nbnc
