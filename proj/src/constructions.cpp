#include "sdd/constructions.hpp"

#include <numeric>
#include <string>

namespace sdd {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::POdd1: return "P_odd_1";
    case CaseTag::PEven1: return "P_even_1";
    case CaseTag::PEven1Tight: return "P_even_1_tight";
    case CaseTag::Gcd1Odd: return "gcd1_odd";
    case CaseTag::Gcd1Even: return "gcd1_even";
    case CaseTag::GcdD: return "gcd_d";
    case CaseTag::IGraphGcd1: return "igraph_gcd1";
    case CaseTag::IGraphGcdD: return "igraph_gcd_d";
  }
  return "unknown";
}

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidParameters, what); }

std::string params(std::size_t n, std::size_t k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

// Shared by P(n,k) and I(n,j,k): only U ⊆ D and the inner cycles matter.
void check_rim_step(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k >= n) invalid("need 2 <= 2k < n, got " + params(n, k));
}

}  // namespace

ConstructionResult construct_pn1(std::size_t n) {
  if (n < 3) invalid("P(n,1) needs n >= 3, got n=" + std::to_string(n));
  const std::size_t m = n / 2;
  VertexSet d(2 * n);
  auto u = [n](std::size_t i) { return static_cast<Vertex>(i % n); };
  auto v = [n](std::size_t i) { return static_cast<Vertex>(n + i % n); };
  for (std::size_t i = 0; i < m; ++i) {
    d.insert(u(2 * i));
    d.insert(v(2 * i));
  }
  ConstructionResult r;
  if (n % 2 == 1) {
    d.insert(u(2 * m - 1));
    d.insert(u(2 * m));
    r.case_tag = CaseTag::POdd1;
  } else {
    d.insert(u(2 * m - 1));
    d.insert(v(2 * m - 1));
    r.case_tag = CaseTag::PEven1;
  }
  r.set = std::move(d);
  r.claimed_size = 2 * m + 2;
  r.cut_forest_expected = true;
  return r;
}

std::pair<ConstructionResult, SignedGraph> construct_pn1_tight(std::size_t n) {
  if (n < 4 || n % 2 != 0) invalid("tight P(n,1) construction needs even n >= 4, got n=" + std::to_string(n));
  const std::size_t m = n / 2;
  ConstructionResult r;
  r.set = VertexSet(2 * n);
  for (std::size_t i = 0; i < m; ++i) {
    r.set.insert(static_cast<Vertex>(2 * i));
    r.set.insert(static_cast<Vertex>(n + 2 * i));
  }
  r.claimed_size = n;
  r.case_tag = CaseTag::PEven1Tight;
  r.cut_forest_expected = false;
  return {std::move(r), all_positive(petersen(n, 1).graph)};
}

ConstructionResult construct_gcd1(std::size_t n, std::size_t k) {
  check_rim_step(n, k);
  if (k < 2 || std::gcd(n, k) != 1) invalid("gcd1 construction needs gcd(n,k) = 1 and k >= 2, got " + params(n, k));

  // 2k < n guarantees t >= 3, so the odd case has m >= 1 and the even case
  // m >= 2.
  const auto blocks = inner_blocks(n, k);
  const std::size_t t = blocks.size();
  const std::size_t m = t / 2;

  ConstructionResult r;
  r.set = VertexSet(2 * n);
  for (std::size_t i = 0; i < n; ++i) r.set.insert(static_cast<Vertex>(i));
  for (std::size_t b = 1; b < t; b += 2)
    for (Vertex x : blocks[b].members()) r.set.insert(x);

  if (t % 2 == 1) {
    r.case_tag = CaseTag::Gcd1Odd;
    r.claimed_size = n + m * k;
  } else {
    r.case_tag = CaseTag::Gcd1Even;
    r.claimed_size = 2 * n - m * k;
  }
  r.cut_forest_expected = true;
  return r;
}

ConstructionResult construct_gcd_d(std::size_t n, std::size_t k) {
  check_rim_step(n, k);
  const std::size_t d = std::gcd(n, k);
  if (d < 2) invalid("gcd_d construction needs gcd(n,k) >= 2, got " + params(n, k));

  const std::size_t per_cycle = ceil_div(n, 3 * d);
  ConstructionResult r;
  r.set = VertexSet(2 * n);
  for (std::size_t i = 0; i < n; ++i) r.set.insert(static_cast<Vertex>(i));
  for (std::size_t cycle = 0; cycle < d; ++cycle)
    for (std::size_t step = 0; step < per_cycle; ++step)
      r.set.insert(static_cast<Vertex>(n + (cycle + 3 * step * k) % n));
  r.claimed_size = n + d * per_cycle;
  r.case_tag = CaseTag::GcdD;
  r.cut_forest_expected = true;
  return r;
}

ConstructionResult construct_igraph(std::size_t n, std::size_t j, std::size_t k) {
  if (j < 1 || j > k) invalid("I(n,j,k) needs 1 <= j <= k, got j=" + std::to_string(j) + " k=" + std::to_string(k));
  check_rim_step(n, k);
  if (j == 1) {
    if (k == 1) return construct_pn1(n);
    return std::gcd(n, k) == 1 ? construct_gcd1(n, k) : construct_gcd_d(n, k);
  }
  ConstructionResult r;
  if (std::gcd(n, k) == 1) {
    r = construct_gcd1(n, k);
    r.case_tag = CaseTag::IGraphGcd1;
  } else {
    r = construct_gcd_d(n, k);
    r.case_tag = CaseTag::IGraphGcdD;
  }
  return r;
}

ConstructionResult construct_for(const FamilyGraph& f) {
  if (f.kind == FamilyKind::Petersen) return construct_igraph(f.n, 1, f.k);
  return construct_igraph(f.n, f.j, f.k);
}

UpperBound upper_bound(std::size_t n, std::size_t j, std::size_t k) {
  if (j < 1 || j > k) invalid("need 1 <= j <= k, got j=" + std::to_string(j) + " k=" + std::to_string(k));
  check_rim_step(n, k);
  UpperBound b;
  if (k == 1) {
    b.exact = 2 * (n / 2 + 1);
    return b;
  }
  const std::size_t d = std::gcd(n, k);
  if (d >= 2) {
    b.exact = n + d * ceil_div(n, 3 * d);
    return b;
  }
  const std::size_t t = ceil_div(n, k);
  const std::size_t m = t / 2;
  b.exact = t % 2 == 1 ? n + m * k : 2 * n - m * k;
  const std::size_t g = std::gcd(3 * n, std::size_t{2});
  b.relaxed = Rational{3 * n / g, 2 / g};
  return b;
}

}  // namespace sdd
