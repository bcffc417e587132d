#include "sdd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sdd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NotEvenGraph: return "NotEvenGraph";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::WrongCardinality: return "WrongCardinality";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::UnderlyingGraphMismatch: return "UnderlyingGraphMismatch";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Edge make_edge(Vertex x, Vertex y) {
  return x < y ? Edge{x, y} : Edge{y, x};
}

// --- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : bits_(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size())
    throw Error(ErrorKind::OutOfRange,
                "vertex " + std::to_string(v) + " outside set universe of size " +
                    std::to_string(bits_.size()));
  bits_.set(v);
}

void VertexSet::erase(Vertex v) {
  if (v < bits_.size()) bits_.reset(v);
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  s.bits_.flip();
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (other.universe() != universe()) return false;
  return bits_.is_subset_of(other.bits_);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
    out.push_back(static_cast<Vertex>(i));
  return out;
}

// --- Graph -----------------------------------------------------------------

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size())) {}

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list)
    : adjacency_(n), incidence_(n) {
  edges_.reserve(edge_list.size());
  for (auto [x, y] : edge_list) {
    if (x >= n || y >= n)
      throw Error(ErrorKind::OutOfRange, "edge (" + std::to_string(x) + "," + std::to_string(y) +
                                             ") has an endpoint outside 0.." +
                                             std::to_string(n == 0 ? 0 : n - 1));
    if (x == y)
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(x));
    edges_.push_back(make_edge(x, y));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  // Edges are sorted by (a, b), so pushing in edge order leaves every
  // neighbor list sorted except for the back-references, fixed below.
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    adjacency_[edges_[e].a].push_back(edges_[e].b);
    incidence_[edges_[e].a].push_back(e);
    adjacency_[edges_[e].b].push_back(edges_[e].a);
    incidence_[edges_[e].b].push_back(e);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = adjacency_[v];
    auto& inc = incidence_[v];
    std::vector<std::size_t> order(nb.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto i, auto j) { return nb[i] < nb[j]; });
    std::vector<Vertex> nb2;
    std::vector<EdgeId> inc2;
    nb2.reserve(nb.size());
    inc2.reserve(nb.size());
    for (auto i : order) {
      nb2.push_back(nb[i]);
      inc2.push_back(inc[i]);
    }
    nb = std::move(nb2);
    inc = std::move(inc2);
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count())
    throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " outside graph on " +
                                           std::to_string(vertex_count()) + " vertices");
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::span<const EdgeId> Graph::incident_edges(Vertex v) const {
  check_vertex(v);
  return incidence_[v];
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) out[v] = adjacency_[v].size();
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : adjacency_) d = std::max(d, nb.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t d = adjacency_.front().size();
  for (const auto& nb : adjacency_) d = std::min(d, nb.size());
  return d;
}

std::optional<EdgeId> Graph::find_edge(Vertex x, Vertex y) const {
  if (x >= vertex_count() || y >= vertex_count()) return std::nullopt;
  const auto& nb = adjacency_[x];
  auto it = std::lower_bound(nb.begin(), nb.end(), y);
  if (it == nb.end() || *it != y) return std::nullopt;
  return incidence_[x][static_cast<std::size_t>(it - nb.begin())];
}

bool Graph::is_regular(std::size_t d) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [d](const auto& nb) { return nb.size() == d; });
}

// --- operations ------------------------------------------------------------

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  g.check_vertex(v);
  VertexSet s(g.vertex_count(), g.neighbors(v));
  s.insert(v);
  return s;
}

static void check_universe(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count())
    throw Error(ErrorKind::OutOfRange, "vertex set universe " + std::to_string(x.universe()) +
                                           " does not match graph on " +
                                           std::to_string(g.vertex_count()) + " vertices");
}

EdgeCut edge_cut(const Graph& g, const VertexSet& x) {
  check_universe(g, x);
  EdgeCut cut{x, {}};
  for (const Edge& e : g.edges())
    if (x.contains(e.a) != x.contains(e.b)) cut.edges.push_back(e);
  return cut;
}

Graph cut_subgraph(const Graph& g, const VertexSet& x) {
  EdgeCut cut = edge_cut(g, x);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(cut.edges.size());
  for (const Edge& e : cut.edges) pairs.emplace_back(e.a, e.b);
  return Graph(g.vertex_count(), pairs);
}

bool is_even_graph(const Graph& g) {
  for (std::size_t d : g.degree_sequence())
    if (d % 2 != 0) return false;
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_forest(const Graph& g) {
  // A forest has exactly n - c edges.
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

CycleDecomposition cycle_decomposition(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0)
      throw Error(ErrorKind::NotEvenGraph,
                  "vertex " + std::to_string(v) + " has odd degree " +
                      std::to_string(g.degree(v)) + "; no cycle decomposition exists");

  const std::size_t n = g.vertex_count();
  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(n, 0);  // next neighbor slot to try
  constexpr std::size_t kNotOnPath = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(n, kNotOnPath);

  auto next_unused = [&](Vertex v) -> std::optional<std::pair<Vertex, EdgeId>> {
    auto nb = g.neighbors(v);
    auto inc = g.incident_edges(v);
    while (cursor[v] < nb.size() && used[inc[cursor[v]]]) ++cursor[v];
    if (cursor[v] == nb.size()) return std::nullopt;
    return std::pair{nb[cursor[v]], inc[cursor[v]]};
  };

  CycleDecomposition out;
  std::vector<Vertex> path;
  for (Vertex start = 0; start < n; ++start) {
    if (!next_unused(start)) continue;
    path.assign(1, start);
    position[start] = 0;
    while (!path.empty()) {
      Vertex v = path.back();
      auto step = next_unused(v);
      if (!step) {
        // Only the walk's start can run dry in an even graph.
        position[v] = kNotOnPath;
        path.pop_back();
        continue;
      }
      auto [w, e] = *step;
      used[e] = true;
      if (position[w] != kNotOnPath) {
        std::size_t p = position[w];
        out.cycles.emplace_back(path.begin() + static_cast<std::ptrdiff_t>(p), path.end());
        for (std::size_t i = p + 1; i < path.size(); ++i) position[path[i]] = kNotOnPath;
        path.resize(p + 1);
      } else {
        position[w] = path.size();
        path.push_back(w);
      }
    }
  }
  return out;
}

bool is_cycle_of(const Graph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) return false;
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

bool is_valid_cycle_decomposition(const Graph& g, const CycleDecomposition& d) {
  std::vector<int> hits(g.edge_count(), 0);
  for (const Cycle& c : d.cycles) {
    if (!is_cycle_of(g, c)) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto e = g.find_edge(c[i], c[(i + 1) % c.size()]);
      if (++hits[*e] > 1) return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

Cycle canonical_cycle(std::span<const Vertex> cycle) {
  if (cycle.empty()) return {};
  const std::size_t len = cycle.size();
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::size_t p = static_cast<std::size_t>(min_it - cycle.begin());
  Vertex next = cycle[(p + 1) % len];
  Vertex prev = cycle[(p + len - 1) % len];
  Cycle out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(next <= prev ? cycle[(p + i) % len] : cycle[(p + len - i) % len]);
  return out;
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t edge_limit) {
  if (g.edge_count() > edge_limit)
    throw Error(ErrorKind::SizeLimitExceeded,
                "cycle enumeration limited to " + std::to_string(edge_limit) + " edges, graph has " +
                    std::to_string(g.edge_count()));

  const std::size_t n = g.vertex_count();
  std::vector<Cycle> out;
  std::vector<bool> on_path(n, false);
  Cycle path;

  // Cycles rooted at their smallest vertex `root`; only vertices above root
  // may appear, and each cycle is taken in the orientation where the second
  // vertex is smaller than the last.
  auto extend = [&](auto&& self, Vertex root) -> void {
    Vertex v = path.back();
    for (Vertex w : g.neighbors(v)) {
      if (w == root && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= root || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, root);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (Vertex root = 0; root < n; ++root) {
    path.assign(1, root);
    on_path[root] = true;
    extend(extend, root);
    on_path[root] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sdd
