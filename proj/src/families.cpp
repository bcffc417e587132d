#include "sdd/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace sdd {

std::string FamilyGraph::name() const {
  if (kind == FamilyKind::Petersen)
    return "P(" + std::to_string(n) + "," + std::to_string(k) + ")";
  return "I(" + std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

namespace {

// Orbits of i -> i + step (mod n), each started at its smallest index.
std::vector<Cycle> rim_cycles(std::size_t n, std::size_t step, std::size_t offset) {
  std::vector<Cycle> out;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (std::size_t i = start; !seen[i]; i = (i + step) % n) {
      seen[i] = true;
      c.push_back(static_cast<Vertex>(offset + i));
    }
    out.push_back(std::move(c));
  }
  return out;
}

FamilyGraph build(FamilyKind kind, std::size_t n, std::size_t j, std::size_t k) {
  FamilyGraph f;
  f.kind = kind;
  f.n = n;
  f.j = j;
  f.k = k;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(f.u(i), f.u(i + j));
    pairs.emplace_back(f.u(i), f.v(i));
    pairs.emplace_back(f.v(i), f.v(i + k));
    f.spokes.push_back(make_edge(f.u(i), f.v(i)));
  }
  f.graph = Graph(2 * n, pairs);
  f.outer_cycles = rim_cycles(n, j, 0);
  f.inner_cycles = rim_cycles(n, k, n);
  return f;
}

}  // namespace

FamilyGraph petersen(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k >= n)
    throw Error(ErrorKind::InvalidParameters,
                "P(n,k) requires 2 <= 2k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  return build(FamilyKind::Petersen, n, 1, k);
}

FamilyGraph igraph(std::size_t n, std::size_t j, std::size_t k) {
  if (j < 1 || j > k || 2 * k >= n)
    throw Error(ErrorKind::InvalidParameters,
                "I(n,j,k) requires 1 <= j <= k and 2k < n, got n=" + std::to_string(n) +
                    " j=" + std::to_string(j) + " k=" + std::to_string(k));
  return build(FamilyKind::IGraph, n, j, k);
}

Graph k4_union(std::size_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidParameters, "k4_union needs at least one copy");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t c = 0; c < m; ++c) {
    const auto base = static_cast<Vertex>(4 * c);
    for (Vertex a = 0; a < 4; ++a)
      for (Vertex b = a + 1; b < 4; ++b) pairs.emplace_back(base + a, base + b);
  }
  return Graph(4 * m, pairs);
}

std::vector<VertexSet> inner_blocks(std::size_t n, std::size_t k) {
  if (k < 2 || k >= n || std::gcd(n, k) != 1)
    throw Error(ErrorKind::InvalidParameters,
                "inner blocks need gcd(n,k) = 1 and 2 <= k < n, got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
  std::vector<VertexSet> blocks;
  for (std::size_t first = 0; first < n; first += k) {
    VertexSet b(2 * n);
    for (std::size_t i = first; i < std::min(n, first + k); ++i) b.insert(static_cast<Vertex>(n + i));
    blocks.push_back(std::move(b));
  }
  return blocks;
}

std::string vertex_label(std::size_t n, Vertex x) {
  if (x >= 2 * n)
    throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(x) + " outside family graph");
  return x < n ? "u" + std::to_string(x) : "v" + std::to_string(x - n);
}

Vertex parse_vertex_label(std::size_t n, std::string_view label) {
  if (label.size() < 2 || (label[0] != 'u' && label[0] != 'v'))
    throw Error(ErrorKind::Parse, "bad vertex label '" + std::string(label) + "'");
  std::size_t i = 0;
  auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw Error(ErrorKind::Parse, "bad vertex label '" + std::string(label) + "'");
  if (i >= n)
    throw Error(ErrorKind::OutOfRange,
                "label '" + std::string(label) + "' exceeds n=" + std::to_string(n));
  return static_cast<Vertex>(label[0] == 'u' ? i : n + i);
}

}  // namespace sdd
