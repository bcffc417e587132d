#include "sdd/signed_graph.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace sdd {

SignedGraph::SignedGraph(Graph graph, Signature signature)
    : graph_(std::move(graph)), signature_(std::move(signature)) {
  if (signature_.size() != graph_.edge_count())
    throw Error(ErrorKind::InvalidParameters,
                "signature has " + std::to_string(signature_.size()) + " signs for " +
                    std::to_string(graph_.edge_count()) + " edges");
}

Sign SignedGraph::sign(Vertex x, Vertex y) const {
  auto e = graph_.find_edge(x, y);
  if (!e)
    throw Error(ErrorKind::NotACycle,
                "(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  return signature_[*e];
}

std::size_t SignedGraph::negative_edge_count() const {
  return static_cast<std::size_t>(std::count(signature_.begin(), signature_.end(), Sign::Negative));
}

SignedGraph all_positive(const Graph& g) {
  return SignedGraph(g, Signature(g.edge_count(), Sign::Positive));
}

Sign cycle_sign(const SignedGraph& s, std::span<const Vertex> cycle) {
  if (cycle.size() < 2) throw Error(ErrorKind::NotACycle, "a cycle needs at least two vertices");
  Sign acc = Sign::Positive;
  for (std::size_t i = 0; i < cycle.size(); ++i) acc = acc * s.sign(cycle[i], cycle[(i + 1) % cycle.size()]);
  return acc;
}

BalanceCertificate is_balanced(const SignedGraph& s) {
  const Graph& g = s.graph();
  const std::size_t n = g.vertex_count();
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Sign> mark(n, Sign::Positive);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);

  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      auto nb = g.neighbors(v);
      auto inc = g.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        Vertex w = nb[i];
        Sign want = mark[v] * s.sign(inc[i]);
        if (!seen[w]) {
          seen[w] = true;
          mark[w] = want;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (mark[w] != want) {
          // Tree paths v..lca and w..lca plus the edge vw.
          std::vector<Vertex> left{v}, right{w};
          Vertex a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // lca already on the left path
          BalanceCertificate cert;
          cert.balanced = false;
          cert.witness_cycle = std::move(left);
          cert.witness_cycle.insert(cert.witness_cycle.end(), right.rbegin(), right.rend());
          return cert;
        }
      }
    }
  }
  return BalanceCertificate{true, std::move(mark), {}};
}

SignedGraph switch_at(const SignedGraph& s, const VertexSet& x) {
  const Graph& g = s.graph();
  if (x.universe() != g.vertex_count())
    throw Error(ErrorKind::OutOfRange, "switching set universe does not match the graph");
  Signature sig = s.signature();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (x.contains(edge.a) != x.contains(edge.b)) sig[e] = flip(sig[e]);
  }
  return SignedGraph(g, std::move(sig));
}

SignedGraph product(const SignedGraph& s1, const SignedGraph& s2) {
  if (!(s1.graph() == s2.graph()))
    throw Error(ErrorKind::UnderlyingGraphMismatch, "signed graphs have different underlying graphs");
  Signature sig(s1.signature().size());
  for (std::size_t e = 0; e < sig.size(); ++e) sig[e] = s1.signature()[e] * s2.signature()[e];
  return SignedGraph(s1.graph(), std::move(sig));
}

bool switching_equivalent(const SignedGraph& s1, const SignedGraph& s2) {
  return is_balanced(product(s1, s2)).balanced;
}

std::optional<VertexSet> switching_witness(const SignedGraph& s1, const SignedGraph& s2) {
  auto cert = is_balanced(product(s1, s2));
  if (!cert.balanced) return std::nullopt;
  // sigma1 sigma2 (uv) = mu(u) mu(v): switching the negatively marked vertices
  // of s2 yields s1.
  VertexSet x(s1.graph().vertex_count());
  for (Vertex v = 0; v < cert.marking.size(); ++v)
    if (cert.marking[v] == Sign::Negative) x.insert(v);
  return x;
}

SignedGraph random_signature(const Graph& g, std::uint64_t seed, double p_neg) {
  if (!(p_neg >= 0.0 && p_neg <= 1.0))
    throw Error(ErrorKind::InvalidParameters, "negative-edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  Signature sig(g.edge_count());
  for (auto& s : sig) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    s = u < p_neg ? Sign::Negative : Sign::Positive;
  }
  return SignedGraph(g, std::move(sig));
}

SignedGraph cut_signed_subgraph(const SignedGraph& s, const VertexSet& x) {
  Graph cut = cut_subgraph(s.graph(), x);
  Signature sig;
  sig.reserve(cut.edge_count());
  for (const Edge& e : cut.edges()) sig.push_back(s.sign(e.a, e.b));
  return SignedGraph(std::move(cut), std::move(sig));
}

std::set<Cycle> negative_cycle_set(const SignedGraph& s, std::size_t edge_limit) {
  std::set<Cycle> out;
  for (Cycle& c : enumerate_cycles(s.graph(), edge_limit))
    if (cycle_sign(s, c) == Sign::Negative) out.insert(std::move(c));
  return out;
}

}  // namespace sdd
