#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sdd/graph.hpp"

namespace sdd {

enum class FamilyKind { Petersen, IGraph };

/// P(n,k) or I(n,j,k) on 2n vertices with the fixed index convention
/// u_i -> i and v_i -> n + i. For P(n,k), j == 1.
struct FamilyGraph {
  FamilyKind kind = FamilyKind::Petersen;
  std::size_t n = 0;
  std::size_t j = 1;
  std::size_t k = 1;
  Graph graph;
  std::vector<Edge> spokes;
  /// Cycles u_i, u_{i+j}, ... on the u-rim; gcd(n, j) of them.
  std::vector<Cycle> outer_cycles;
  /// Cycles v_i, v_{i+k}, ... on the v-rim; gcd(n, k) of them.
  std::vector<Cycle> inner_cycles;

  Vertex u(std::size_t i) const { return static_cast<Vertex>(i % n); }
  Vertex v(std::size_t i) const { return static_cast<Vertex>(n + i % n); }

  /// "P(5,2)" or "I(7,2,3)".
  std::string name() const;
};

/// Generalized Petersen graph; requires 2 <= 2k < n.
FamilyGraph petersen(std::size_t n, std::size_t k);

/// I-graph; requires 1 <= j <= k, 2j < n and 2k < n. igraph(n, 1, k) is
/// edge-for-edge petersen(n, k) but tagged as an I-graph.
FamilyGraph igraph(std::size_t n, std::size_t j, std::size_t k);

/// m disjoint copies of K4; copy c occupies vertices 4c..4c+3.
Graph k4_union(std::size_t m);

/// Partition of the v-vertices into consecutive index blocks
/// {v_{ik}, ..., v_{ik+k-1}}, the last block holding the remainder.
/// Requires gcd(n, k) == 1, k >= 2 and k < n.
std::vector<VertexSet> inner_blocks(std::size_t n, std::size_t k);

/// Label for vertex index x of a family graph on 2n vertices: "u3", "v0".
std::string vertex_label(std::size_t n, Vertex x);

/// Parses "u3"/"v0" (family labels) relative to n. Throws Parse on bad input.
Vertex parse_vertex_label(std::size_t n, std::string_view label);

}  // namespace sdd
