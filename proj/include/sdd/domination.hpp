#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>

#include "sdd/graph.hpp"
#include "sdd/signed_graph.hpp"

namespace sdd {

enum class FailureKind { None, Coverage, UnbalancedCut };

std::string_view to_string(FailureKind kind);

struct DdsVerdict {
  bool ok = true;
  FailureKind failure = FailureKind::None;
  /// Coverage failure: the smallest vertex v with |N[v] ∩ D| below the
  /// required multiplicity, and that multiplicity.
  Vertex vertex = 0;
  std::size_t multiplicity = 0;
  /// Unbalanced cut: a negative cycle of the signed cut subgraph.
  Cycle witness_cycle;
};

/// |N[v] ∩ D|.
std::size_t domination_multiplicity(const Graph& g, const VertexSet& d, Vertex v);

/// Coverage only: every vertex must have multiplicity >= k.
DdsVerdict is_k_tuple_dominating(const Graph& g, const VertexSet& d, std::size_t k = 2);

/// Double domination of a signed graph: coverage with k = 2, then balance of
/// the signed cut subgraph on [D : V \ D]. Balance is only checked once
/// coverage passes.
DdsVerdict is_signed_dds(const SignedGraph& s, const VertexSet& d);

/// Limits for the exact solvers. Zero means "unlimited" for nodes and time.
struct SolveLimits {
  std::size_t max_vertices = 24;
  std::uint64_t max_nodes = 0;
  std::chrono::milliseconds wall_clock{0};
  /// Number of worker threads. Value and witness do not depend on it;
  /// nodes_explored does.
  unsigned workers = 1;
};

struct SolveResult {
  std::size_t value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  /// When set, `value`/`witness` are only the best set found so far (the
  /// full vertex set unless something smaller was proved feasible).
  bool limits_hit = false;
};

/// Exact minimum k-tuple dominating set.
///
/// Sizes are tried in increasing order starting from the counting bound
/// ceil(k n / (maxdeg + 1)); inside one size, vertices are decided in index
/// order with inclusion first, so the first hit is the lexicographically
/// smallest minimum set. Throws SizeLimitExceeded above limits.max_vertices
/// and Infeasible when even V fails.
SolveResult min_k_tuple_dominating(const Graph& g, std::size_t k = 2, const SolveLimits& limits = {});

/// Exact double domination number of a signed graph, same search order. Cut
/// edges between decided vertices are tracked in a parity union-find so an
/// unbalanced partial cut prunes immediately. Starts at |V|/2 for cubic
/// graphs.
SolveResult min_signed_dds(const SignedGraph& s, const SolveLimits& limits = {});

/// |V|/2 for a cubic graph (no DDS is smaller). Throws NotCubic.
std::size_t cubic_lower_bound(const Graph& g);

struct HalfDdsReport {
  bool is_dds = false;
  DdsVerdict coverage;
  /// cut degree -> number of vertices with that degree
  std::map<std::size_t, std::size_t> cut_degree_profile;
  /// Every vertex of positive cut degree has cut degree exactly 2.
  bool cut_two_regular = false;
  /// Present whenever the cut subgraph is even.
  std::optional<CycleDecomposition> decomposition;
};

/// Structure of [D : V \ D] for a half-size set in a cubic graph.
/// Throws NotCubic or WrongCardinality (|D| != |V|/2).
HalfDdsReport analyze_half_dds(const Graph& g, const VertexSet& d);

}  // namespace sdd
