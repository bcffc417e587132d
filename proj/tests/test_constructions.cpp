#include "doctest.h"

#include <numeric>

#include "sdd/constructions.hpp"
#include "sdd/domination.hpp"

using namespace sdd;

namespace {

ErrorKind error_kind(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;  // sentinel: no error raised
}

VertexSet labelled(std::size_t n, std::initializer_list<const char*> labels) {
  VertexSet s(2 * n);
  for (const char* l : labels) s.insert(parse_vertex_label(n, l));
  return s;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// Closed form recomputed from the parameters alone.
std::size_t expected_size(std::size_t n, std::size_t k) {
  if (k == 1) return 2 * (n / 2 + 1);
  const std::size_t d = std::gcd(n, k);
  if (d >= 2) return n + d * ceil_div(n, 3 * d);
  const std::size_t t = ceil_div(n, k);
  const std::size_t m = t / 2;
  return t % 2 == 1 ? n + m * k : 2 * n - m * k;
}

}  // namespace

TEST_CASE("construct_pn1") {
  auto r5 = construct_pn1(5);
  CHECK(r5.set == labelled(5, {"u0", "v0", "u2", "v2", "u3", "u4"}));
  CHECK(r5.claimed_size == 6);
  CHECK(r5.case_tag == CaseTag::POdd1);

  auto r4 = construct_pn1(4);
  CHECK(r4.set == labelled(4, {"u0", "v0", "u2", "v2", "u3", "v3"}));
  CHECK(r4.case_tag == CaseTag::PEven1);

  auto r3 = construct_pn1(3);
  CHECK(r3.set == labelled(3, {"u0", "v0", "u1", "u2"}));
  CHECK(is_signed_dds(all_positive(petersen(3, 1).graph), r3.set).ok);

  auto r6 = construct_pn1(6);
  Graph cut = cut_subgraph(petersen(6, 1).graph, r6.set);
  CHECK(is_forest(cut));
  CHECK(enumerate_cycles(cut).empty());

  CHECK(error_kind([] { construct_pn1(2); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("construct_pn1_tight") {
  auto [r4, s4] = construct_pn1_tight(4);
  CHECK(r4.set == labelled(4, {"u0", "v0", "u2", "v2"}));
  CHECK(r4.claimed_size == 4);
  CHECK(r4.case_tag == CaseTag::PEven1Tight);
  CHECK_FALSE(r4.cut_forest_expected);
  CHECK(s4.negative_edge_count() == 0);
  CHECK(is_signed_dds(s4, r4.set).ok);

  auto [r6, s6] = construct_pn1_tight(6);
  CHECK(r6.set.size() == 6);
  auto p6 = petersen(6, 1);
  auto dec = cycle_decomposition(cut_subgraph(p6.graph, r6.set));
  std::vector<Cycle> rims{p6.outer_cycles[0], p6.inner_cycles[0]};
  CHECK(dec.cycles == rims);

  // A negative outer cycle breaks condition (ii).
  Signature sig = s6.signature();
  sig[*p6.graph.find_edge(p6.u(0), p6.u(1))] = Sign::Negative;
  auto verdict = is_signed_dds(SignedGraph(p6.graph, sig), r6.set);
  CHECK(verdict.failure == FailureKind::UnbalancedCut);

  CHECK(error_kind([] { construct_pn1_tight(5); }) == ErrorKind::InvalidParameters);
  CHECK(error_kind([] { construct_pn1_tight(2); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("construct_gcd1") {
  auto r5 = construct_gcd1(5, 2);
  CHECK(r5.set == labelled(5, {"u0", "u1", "u2", "u3", "u4", "v2", "v3"}));
  CHECK(r5.claimed_size == 7);
  CHECK(r5.case_tag == CaseTag::Gcd1Odd);

  auto r17 = construct_gcd1(17, 2);
  CHECK(r17.set.size() == 25);
  CHECK(r17.claimed_size == 25);
  CHECK(r17.case_tag == CaseTag::Gcd1Odd);

  auto r15 = construct_gcd1(15, 2);
  CHECK(r15.set.size() == 22);
  CHECK(r15.case_tag == CaseTag::Gcd1Even);

  CHECK(error_kind([] { construct_gcd1(6, 2); }) == ErrorKind::InvalidParameters);
  CHECK(error_kind([] { construct_gcd1(7, 1); }) == ErrorKind::InvalidParameters);
  CHECK(error_kind([] { construct_gcd1(7, 4); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("construct_gcd_d") {
  auto r16 = construct_gcd_d(16, 6);
  CHECK(r16.set.size() == 22);
  CHECK(r16.claimed_size == 22);
  VertexSet inner(32);
  for (Vertex x : r16.set.members())
    if (x >= 16) inner.insert(x);
  CHECK(inner == labelled(16, {"v0", "v2", "v4", "v1", "v3", "v5"}));

  auto r6 = construct_gcd_d(6, 2);
  CHECK(r6.set == labelled(6, {"u0", "u1", "u2", "u3", "u4", "u5", "v0", "v1"}));
  CHECK(r6.claimed_size == 8);

  CHECK(construct_gcd_d(9, 3).set.size() == 12);
  CHECK(error_kind([] { construct_gcd_d(7, 2); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("construct_igraph") {
  auto r7 = construct_igraph(7, 2, 3);
  CHECK(r7.set.size() == 10);
  CHECK(r7.case_tag == CaseTag::IGraphGcd1);
  CHECK(is_signed_dds(all_positive(igraph(7, 2, 3).graph), r7.set).ok);

  auto r8 = construct_igraph(8, 2, 2);
  CHECK(r8.set.size() == 12);
  CHECK(r8.case_tag == CaseTag::IGraphGcdD);
  CHECK(is_signed_dds(all_positive(igraph(8, 2, 2).graph), r8.set).ok);

  for (std::size_t n = 3; n <= 30; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k) {
      auto via_i = construct_igraph(n, 1, k);
      auto direct = construct_for(petersen(n, k));
      CHECK(via_i.set == direct.set);
      CHECK(via_i.case_tag == direct.case_tag);
      CHECK(via_i.claimed_size == direct.claimed_size);
    }
  CHECK(error_kind([] { construct_igraph(9, 3, 2); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("upper_bound") {
  CHECK(upper_bound(7, 1, 1).exact == 8);
  CHECK_FALSE(upper_bound(7, 1, 1).relaxed);

  auto b15 = upper_bound(15, 1, 2);
  CHECK(b15.exact == 22);
  REQUIRE(b15.relaxed);
  CHECK(*b15.relaxed == Rational{45, 2});
  CHECK(2 * b15.exact <= 45);

  CHECK(upper_bound(16, 1, 6).exact == 22);
  CHECK_FALSE(upper_bound(16, 1, 6).relaxed);
  CHECK(*upper_bound(10, 1, 3).relaxed == Rational{15, 1});
}

TEST_CASE("size identities and forest cuts over the n <= 60 sweep") {
  for (std::size_t n = 3; n <= 60; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k) {
      auto p = petersen(n, k);
      auto r = construct_for(p);
      CAPTURE(p.name());
      CHECK(r.set.size() == r.claimed_size);
      CHECK(r.claimed_size == expected_size(n, k));
      CHECK(upper_bound(n, 1, k).exact == r.claimed_size);
      CHECK(r.cut_forest_expected);
      CHECK(is_forest(cut_subgraph(p.graph, r.set)));
      CHECK(is_k_tuple_dominating(p.graph, r.set).ok);
      if (k >= 2 && std::gcd(n, k) == 1) {
        auto rel = *upper_bound(n, 1, k).relaxed;
        CHECK(r.claimed_size * rel.den <= rel.num);
        CHECK(r.case_tag == (ceil_div(n, k) % 2 == 1 ? CaseTag::Gcd1Odd : CaseTag::Gcd1Even));
      } else if (k >= 2) {
        CHECK(r.case_tag == CaseTag::GcdD);
      } else {
        CHECK(r.case_tag == (n % 2 == 1 ? CaseTag::POdd1 : CaseTag::PEven1));
      }

      for (std::size_t j = 2; j <= k && k <= 5; ++j) {
        auto g = igraph(n, j, k);
        auto ri = construct_for(g);
        CAPTURE(g.name());
        CHECK(ri.set.size() == ri.claimed_size);
        CHECK(ri.claimed_size == expected_size(n, k));
        CHECK(is_forest(cut_subgraph(g.graph, ri.set)));
        CHECK(is_k_tuple_dominating(g.graph, ri.set).ok);
      }
    }
}

TEST_CASE("constructions hold for random signatures") {
  std::uint64_t seed = 1;
  for (std::size_t n = 3; n <= 20; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k) {
      auto p = petersen(n, k);
      auto r = construct_for(p);
      for (int i = 0; i < 10; ++i) CHECK(is_signed_dds(random_signature(p.graph, seed++, 0.5), r.set).ok);
    }
}

TEST_CASE("solver value sits between the cubic bound and the construction") {
  std::uint64_t seed = 7;
  for (std::size_t n = 3; 2 * n <= 16; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k) {
      auto p = petersen(n, k);
      auto r = construct_for(p);
      CAPTURE(p.name());
      for (int i = 0; i < 3; ++i) {
        auto v = min_signed_dds(random_signature(p.graph, seed++, 0.5)).value;
        CHECK(cubic_lower_bound(p.graph) <= v);
        CHECK(v <= r.set.size());
      }
    }
}

TEST_CASE("tight P(2m,1) values") {
  for (std::size_t n = 4; n <= 8; n += 2) {
    auto [r, s] = construct_pn1_tight(n);
    CHECK(min_signed_dds(s).value == n);
  }
}
