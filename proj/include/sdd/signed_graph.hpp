#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "sdd/graph.hpp"

namespace sdd {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

inline Sign operator*(Sign x, Sign y) {
  return x == y ? Sign::Positive : Sign::Negative;
}
inline Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

/// One sign per edge, indexed by the graph's EdgeId (canonical edge order).
using Signature = std::vector<Sign>;

/// A graph together with a total signature over its edges.
class SignedGraph {
 public:
  SignedGraph() = default;
  /// Throws InvalidParameters if the signature length differs from |E|.
  SignedGraph(Graph graph, Signature signature);

  const Graph& graph() const { return graph_; }
  const Signature& signature() const { return signature_; }

  Sign sign(EdgeId e) const { return signature_.at(e); }
  /// Throws NotACycle if xy is not an edge.
  Sign sign(Vertex x, Vertex y) const;

  std::size_t negative_edge_count() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  Graph graph_;
  Signature signature_;
};

/// Either a vertex marking proving balance (sigma(uv) = mu(u) mu(v) on every
/// edge, each component's smallest vertex marked +) or a negative cycle.
struct BalanceCertificate {
  bool balanced = true;
  std::vector<Sign> marking;  // empty when unbalanced
  Cycle witness_cycle;        // empty when balanced
};

SignedGraph all_positive(const Graph& g);

/// Product of the signs along the closed walk (last vertex wraps to first).
/// Throws NotACycle if a consecutive pair is not an edge.
Sign cycle_sign(const SignedGraph& s, std::span<const Vertex> cycle);

/// Breadth-first marking per component. A conflicting edge closes a cycle
/// through the BFS tree; that cycle is negative and returned as witness.
BalanceCertificate is_balanced(const SignedGraph& s);

/// Negates every edge with exactly one endpoint in x.
SignedGraph switch_at(const SignedGraph& s, const VertexSet& x);

/// Edgewise product of two signatures on the same graph.
SignedGraph product(const SignedGraph& s1, const SignedGraph& s2);

/// Two signed graphs on the same underlying graph are switching equivalent
/// iff their product signature is balanced. Throws UnderlyingGraphMismatch.
bool switching_equivalent(const SignedGraph& s1, const SignedGraph& s2);

/// When s1 ~ s2, a switching set X with s1 = switch_at(s2, X).
std::optional<VertexSet> switching_witness(const SignedGraph& s1, const SignedGraph& s2);

/// Each edge independently negative with probability p_neg.
///
/// Generator: std::mt19937_64 seeded with `seed`. For every edge in canonical
/// order one 64-bit draw x is taken; the edge is negative iff
/// (x >> 11) * 2^-53 < p_neg. This makes the output reproducible across
/// platforms and implementations. Throws InvalidParameters outside [0, 1].
SignedGraph random_signature(const Graph& g, std::uint64_t seed, double p_neg);

/// Signed subgraph on the cut [x : V \ x], signs inherited from s.
SignedGraph cut_signed_subgraph(const SignedGraph& s, const VertexSet& x);

/// All negative simple cycles in canonical form (see enumerate_cycles).
std::set<Cycle> negative_cycle_set(const SignedGraph& s,
                                   std::size_t edge_limit = kDefaultCycleEdgeLimit);

}  // namespace sdd
