#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sdd/error.hpp"

namespace sdd {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge stored canonically with first < second.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Vertex x, Vertex y);

using Cycle = std::vector<Vertex>;

/// Dense subset of 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;

  /// Sorted member list.
  std::vector<Vertex> members() const;

  const boost::dynamic_bitset<>& bits() const { return bits_; }

  friend bool operator==(const VertexSet& x, const VertexSet& y) {
    return x.bits_ == y.bits_;
  }

 private:
  boost::dynamic_bitset<> bits_;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Edges are kept in canonical sorted order; an EdgeId is the position in that
/// order, which is also how signatures index their signs.
class Graph {
 public:
  Graph() = default;

  /// Self-loops and out-of-range endpoints throw. Repeated pairs (in either
  /// orientation) collapse into one edge.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const;
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const;

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::vector<std::size_t> degree_sequence() const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  bool has_edge(Vertex x, Vertex y) const { return find_edge(x, y).has_value(); }
  std::optional<EdgeId> find_edge(Vertex x, Vertex y) const;

  bool is_regular(std::size_t d) const;
  bool is_cubic() const { return vertex_count() > 0 && is_regular(3); }

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.vertex_count() == y.vertex_count() && x.edges_ == y.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Edges with exactly one endpoint in `left`.
struct EdgeCut {
  VertexSet left;
  std::vector<Edge> edges;
};

/// Edge partition of an even graph into cycles. Each cycle lists its vertices
/// once; the closing edge back to the first vertex is implicit.
struct CycleDecomposition {
  std::vector<Cycle> cycles;
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);

EdgeCut edge_cut(const Graph& g, const VertexSet& x);

/// Subgraph on the same index space whose edges are edge_cut(g, x).
/// Vertices without cut edges stay as isolated vertices.
Graph cut_subgraph(const Graph& g, const VertexSet& x);

bool is_even_graph(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_forest(const Graph& g);

/// Veblen decomposition by greedy closed walks. Always extends along the
/// smallest-index unused neighbor and starts each walk at the smallest vertex
/// that still has unused edges, so the output is fully deterministic.
/// Throws NotEvenGraph if some degree is odd.
CycleDecomposition cycle_decomposition(const Graph& g);

/// Checks that `d` partitions E(g) into cycles of g.
bool is_valid_cycle_decomposition(const Graph& g, const CycleDecomposition& d);

inline constexpr std::size_t kDefaultCycleEdgeLimit = 64;

/// All simple cycles, each once, in canonical form: smallest vertex first,
/// and its smaller cycle-neighbor second. Sorted lexicographically.
/// Exponential; throws SizeLimitExceeded above `edge_limit` edges.
std::vector<Cycle> enumerate_cycles(const Graph& g,
                                    std::size_t edge_limit = kDefaultCycleEdgeLimit);

/// Rotates/reflects a cycle into the canonical form used by enumerate_cycles.
Cycle canonical_cycle(std::span<const Vertex> cycle);

/// True if consecutive vertices (wrapping) are adjacent, vertices are
/// distinct and there are at least three of them.
bool is_cycle_of(const Graph& g, std::span<const Vertex> cycle);

}  // namespace sdd
