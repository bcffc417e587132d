#include "sdd/domination.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace sdd {

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::None: return "none";
    case FailureKind::Coverage: return "coverage";
    case FailureKind::UnbalancedCut: return "unbalanced_cut";
  }
  return "unknown";
}

std::size_t domination_multiplicity(const Graph& g, const VertexSet& d, Vertex v) {
  g.check_vertex(v);
  std::size_t count = d.contains(v) ? 1 : 0;
  for (Vertex w : g.neighbors(v))
    if (d.contains(w)) ++count;
  return count;
}

DdsVerdict is_k_tuple_dominating(const Graph& g, const VertexSet& d, std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidParameters, "k-tuple domination needs k >= 1");
  if (d.universe() != g.vertex_count())
    throw Error(ErrorKind::OutOfRange, "candidate set universe does not match the graph");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::size_t m = domination_multiplicity(g, d, v);
    if (m < k) {
      DdsVerdict verdict;
      verdict.ok = false;
      verdict.failure = FailureKind::Coverage;
      verdict.vertex = v;
      verdict.multiplicity = m;
      return verdict;
    }
  }
  return {};
}

DdsVerdict is_signed_dds(const SignedGraph& s, const VertexSet& d) {
  DdsVerdict verdict = is_k_tuple_dominating(s.graph(), d, 2);
  if (!verdict.ok) return verdict;
  BalanceCertificate cert = is_balanced(cut_signed_subgraph(s, d));
  if (!cert.balanced) {
    verdict.ok = false;
    verdict.failure = FailureKind::UnbalancedCut;
    verdict.witness_cycle = std::move(cert.witness_cycle);
  }
  return verdict;
}

std::size_t cubic_lower_bound(const Graph& g) {
  if (!g.is_cubic()) throw Error(ErrorKind::NotCubic, "graph is not cubic");
  return g.vertex_count() / 2;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedBudget {
  std::uint64_t max_nodes = 0;
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
};

/// Parity union-find with rollback. parity[x] is the sign of the path from x
/// to its parent (0 = positive); no path compression so unions can be undone.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), rank_(n, 0), parity_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<Vertex>(i);
  }

  /// Adds the constraint parity(x) ^ parity(y) == p. False on contradiction.
  bool unite(Vertex x, Vertex y, std::uint8_t p) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == p;
    if (rank_[rx] > rank_[ry]) std::swap(rx, ry);
    history_.push_back({rx, ry, rank_[ry]});
    parent_[rx] = ry;
    parity_[rx] = px ^ py ^ p;
    if (rank_[rx] == rank_[ry]) ++rank_[ry];
    return true;
  }

  std::size_t mark() const { return history_.size(); }

  void rollback(std::size_t to) {
    while (history_.size() > to) {
      auto [child, root, old_rank] = history_.back();
      history_.pop_back();
      parent_[child] = child;
      parity_[child] = 0;
      rank_[root] = old_rank;
    }
  }

 private:
  std::pair<Vertex, std::uint8_t> find(Vertex x) const {
    std::uint8_t p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }

  struct Change {
    Vertex child;
    Vertex root;
    std::uint8_t old_rank;
  };
  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::uint8_t> parity_;
  std::vector<Change> history_;
};

/// Depth-first search for a set of exactly `target` vertices, deciding
/// vertices 0..n-1 in order with inclusion tried first.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, std::size_t k, const SignedGraph* signs, SharedBudget& budget)
      : g_(g),
        k_(k),
        signs_(signs),
        budget_(budget),
        n_(g.vertex_count()),
        reach_(g.max_degree() + 1),
        state_(n_, Undecided),
        cover_(n_, 0),
        remaining_(n_),
        uf_(n_) {
    closed_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v].push_back(v);
      for (Vertex w : g.neighbors(v)) closed_[v].push_back(w);
    }
  }

  /// prefix[i] forces the decision for vertex i (true = include).
  bool run(std::size_t target, const std::vector<bool>& prefix) {
    target_ = target;
    prefix_ = &prefix;
    chosen_ = 0;
    deficit_ = k_ * n_;
    std::fill(state_.begin(), state_.end(), Undecided);
    std::fill(cover_.begin(), cover_.end(), 0);
    for (Vertex v = 0; v < n_; ++v) remaining_[v] = closed_[v].size();
    uf_.rollback(0);
    return descend(0);
  }

  std::vector<Vertex> chosen_members() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
      if (state_[v] == In) out.push_back(v);
    return out;
  }

 private:
  enum State : std::uint8_t { Undecided, In, Out };

  bool count_node() {
    if (budget_.aborted.load(std::memory_order_relaxed)) return false;
    auto seen = budget_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_.max_nodes != 0 && seen > budget_.max_nodes) {
      budget_.aborted.store(true);
      return false;
    }
    if (budget_.deadline && (seen & 1023) == 0 && Clock::now() > *budget_.deadline) {
      budget_.aborted.store(true);
      return false;
    }
    return true;
  }

  bool descend(Vertex i) {
    if (!count_node()) return false;
    if (i == n_) return true;

    const bool forced = i < prefix_->size();
    const bool may_include = chosen_ < target_ && (!forced || (*prefix_)[i]);
    const bool may_exclude = chosen_ + (n_ - i - 1) >= target_ && (!forced || !(*prefix_)[i]);

    if (may_include) {
      const std::size_t mark = uf_.mark();
      const bool ok = decide(i, In);
      if (ok && descend(i + 1)) return true;
      undo(i, In, mark);
      if (budget_.aborted.load(std::memory_order_relaxed)) return false;
    }
    if (may_exclude) {
      const std::size_t mark = uf_.mark();
      const bool ok = decide(i, Out);
      if (ok && descend(i + 1)) return true;
      undo(i, Out, mark);
    }
    return false;
  }

  // Always applies every counter update so undo() can mirror it exactly;
  // the return value only reports whether the branch is still viable.
  bool decide(Vertex i, State s) {
    state_[i] = s;
    bool ok = true;
    if (s == In) ++chosen_;
    for (Vertex w : closed_[i]) {
      --remaining_[w];
      if (s == In) {
        if (cover_[w] < k_) --deficit_;
        ++cover_[w];
      } else if (cover_[w] + remaining_[w] < k_) {
        ok = false;
      }
    }
    if (!ok) return false;
    if ((target_ - chosen_) * reach_ < deficit_) return false;
    if (signs_ != nullptr) {
      auto nb = g_.neighbors(i);
      auto inc = g_.incident_edges(i);
      for (std::size_t t = 0; t < nb.size() && nb[t] < i; ++t) {
        if (state_[nb[t]] == s) continue;
        std::uint8_t parity = signs_->sign(inc[t]) == Sign::Negative ? 1 : 0;
        if (!uf_.unite(i, nb[t], parity)) return false;
      }
    }
    return true;
  }

  void undo(Vertex i, State s, std::size_t mark) {
    uf_.rollback(mark);
    for (Vertex w : closed_[i]) {
      ++remaining_[w];
      if (s == In) {
        --cover_[w];
        if (cover_[w] < k_) ++deficit_;
      }
    }
    if (s == In) --chosen_;
    state_[i] = Undecided;
  }

  const Graph& g_;
  std::size_t k_;
  const SignedGraph* signs_;
  SharedBudget& budget_;
  std::size_t n_;
  std::size_t reach_;
  std::vector<std::vector<Vertex>> closed_;
  std::vector<State> state_;
  std::vector<std::size_t> cover_;
  std::vector<std::size_t> remaining_;
  ParityUnionFind uf_;
  std::size_t target_ = 0;
  std::size_t chosen_ = 0;
  std::size_t deficit_ = 0;
  const std::vector<bool>* prefix_ = nullptr;
};

std::vector<bool> task_prefix(std::size_t task, std::size_t depth) {
  // Task 0 includes every prefix vertex; increasing task ids follow the
  // include-first lexicographic order of the search.
  std::vector<bool> prefix(depth);
  for (std::size_t i = 0; i < depth; ++i) prefix[i] = ((task >> (depth - 1 - i)) & 1U) == 0;
  return prefix;
}

/// Lexicographically first set of size `target`, or nullopt when none exists
/// or the budget ran out (budget.aborted tells which).
std::optional<std::vector<Vertex>> search_size(const Graph& g, std::size_t k, const SignedGraph* signs,
                                               std::size_t target, unsigned workers,
                                               SharedBudget& budget) {
  if (workers <= 1) {
    SubsetSearch search(g, k, signs, budget);
    if (search.run(target, {})) return search.chosen_members();
    return std::nullopt;
  }

  std::size_t depth = 4;
  while ((std::size_t{1} << (depth - 4)) < workers) ++depth;
  depth = std::min(depth, g.vertex_count());
  const std::size_t tasks = std::size_t{1} << depth;

  std::vector<std::optional<std::vector<Vertex>>> found(tasks);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};

  auto work = [&] {
    SubsetSearch search(g, k, signs, budget);
    for (;;) {
      std::size_t t = next.fetch_add(1);
      if (t >= tasks || t > first_hit.load() || budget.aborted.load()) return;
      if (search.run(target, task_prefix(t, depth))) {
        found[t] = search.chosen_members();
        std::size_t cur = first_hit.load();
        while (t < cur && !first_hit.compare_exchange_weak(cur, t)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  // Reduction: the smallest task id holding a set wins, which is exactly the
  // set a single worker would have returned.
  for (auto& f : found)
    if (f) return std::move(f);
  return std::nullopt;
}

SolveResult solve(const Graph& g, std::size_t k, const SignedGraph* signs, const SolveLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (n > limits.max_vertices)
    throw Error(ErrorKind::SizeLimitExceeded, "exact solver limited to " + std::to_string(limits.max_vertices) +
                                                  " vertices, graph has " + std::to_string(n));
  if (k < 1) throw Error(ErrorKind::InvalidParameters, "k-tuple domination needs k >= 1");

  const VertexSet everything = VertexSet::full(n);
  DdsVerdict full = is_k_tuple_dominating(g, everything, k);
  if (!full.ok)
    throw Error(ErrorKind::Infeasible, "vertex " + std::to_string(full.vertex) + " has only " +
                                           std::to_string(full.multiplicity) +
                                           " vertices in its closed neighborhood; no set dominates it " +
                                           std::to_string(k) + " times");

  SharedBudget budget;
  budget.max_nodes = limits.max_nodes;
  if (limits.wall_clock.count() > 0) budget.deadline = Clock::now() + limits.wall_clock;

  std::size_t lower = 0;
  if (n > 0) {
    if (signs != nullptr && k == 2 && g.is_cubic())
      lower = cubic_lower_bound(g);
    else
      lower = (k * n + g.max_degree()) / (g.max_degree() + 1);
  }

  SolveResult result;
  result.value = n;
  result.witness = everything;
  for (std::size_t target = lower; target <= n; ++target) {
    auto hit = search_size(g, k, signs, target, std::max(1U, limits.workers), budget);
    if (hit) {
      result.value = target;
      result.witness = VertexSet(n, *hit);
      result.limits_hit = budget.aborted.load();
      break;
    }
    if (budget.aborted.load()) {
      result.limits_hit = true;
      break;
    }
  }
  result.nodes_explored = std::min<std::uint64_t>(
      budget.nodes.load(), budget.max_nodes == 0 ? budget.nodes.load() : budget.max_nodes);

  DdsVerdict check = signs != nullptr ? is_signed_dds(*signs, result.witness)
                                      : is_k_tuple_dominating(g, result.witness, k);
  if (!check.ok) throw std::logic_error("solver produced a set that fails verification");
  return result;
}

}  // namespace

SolveResult min_k_tuple_dominating(const Graph& g, std::size_t k, const SolveLimits& limits) {
  return solve(g, k, nullptr, limits);
}

SolveResult min_signed_dds(const SignedGraph& s, const SolveLimits& limits) {
  return solve(s.graph(), 2, &s, limits);
}

HalfDdsReport analyze_half_dds(const Graph& g, const VertexSet& d) {
  if (!g.is_cubic()) throw Error(ErrorKind::NotCubic, "half-size analysis needs a cubic graph");
  if (d.universe() != g.vertex_count() || 2 * d.size() != g.vertex_count())
    throw Error(ErrorKind::WrongCardinality, "set has " + std::to_string(d.size()) +
                                                 " vertices, expected |V|/2 = " +
                                                 std::to_string(g.vertex_count() / 2));
  HalfDdsReport report;
  report.coverage = is_k_tuple_dominating(g, d, 2);
  report.is_dds = report.coverage.ok;

  Graph cut = cut_subgraph(g, d);
  bool any = false;
  report.cut_two_regular = true;
  for (std::size_t deg : cut.degree_sequence()) {
    ++report.cut_degree_profile[deg];
    if (deg != 0) any = true;
    if (deg != 0 && deg != 2) report.cut_two_regular = false;
  }
  report.cut_two_regular = report.cut_two_regular && any;
  if (is_even_graph(cut)) report.decomposition = cycle_decomposition(cut);
  return report;
}

}  // namespace sdd
