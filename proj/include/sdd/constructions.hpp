#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "sdd/families.hpp"
#include "sdd/signed_graph.hpp"

namespace sdd {

enum class CaseTag {
  POdd1,
  PEven1,
  PEven1Tight,
  Gcd1Odd,
  Gcd1Even,
  GcdD,
  IGraphGcd1,
  IGraphGcdD,
};

/// Stable names used in reports: "P_odd_1", "gcd1_even", ...
std::string_view to_string(CaseTag tag);

/// A double dominating set built from the closed-form recipes, together
/// with the size the recipe promises.
struct ConstructionResult {
  VertexSet set;
  std::size_t claimed_size = 0;
  CaseTag case_tag = CaseTag::POdd1;
  /// The cut [D : V \ D] is a forest, so D works for every signature.
  bool cut_forest_expected = true;
};

/// P(n,1), n >= 3. With n = 2m+1 or 2m the set is
/// {u_{2i}, v_{2i} : i < m} plus {u_{2m-1}, u_{2m}} (odd) or
/// {u_{2m-1}, v_{2m-1}} (even); size 2m + 2 either way.
ConstructionResult construct_pn1(std::size_t n);

/// P(2m,1), m >= 2: D = {u_{2i}, v_{2i} : i < m} of size 2m. The cut is the
/// outer cycle plus the inner cycle, so D is only a DDS when both are
/// positive; the all-positive signature is returned as the representative.
std::pair<ConstructionResult, SignedGraph> construct_pn1_tight(std::size_t n);

/// P(n,k) with gcd(n,k) = 1, k >= 2: D = U plus every second inner block
/// (blocks 2, 4, ...). With t = ceil(n/k) blocks this has size n + mk when
/// t = 2m + 1 and 2n - mk when t = 2m.
ConstructionResult construct_gcd1(std::size_t n, std::size_t k);

/// P(n,k) with d = gcd(n,k) >= 2: D = U plus, on each of the d inner cycles,
/// every third vertex starting from v_r (r < d). Size n + d ceil(n / 3d).
ConstructionResult construct_gcd_d(std::size_t n, std::size_t k);

/// I(n,j,k). j == 1 delegates to the generalized Petersen recipes; otherwise
/// the gcd1 / gcd_d sets are reused since they contain all of U.
ConstructionResult construct_igraph(std::size_t n, std::size_t j, std::size_t k);

/// Dispatches on the family graph's kind and parameters.
ConstructionResult construct_for(const FamilyGraph& f);

struct Rational {
  std::size_t num = 0;
  std::size_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct UpperBound {
  /// The closed form for the matching case.
  std::size_t exact = 0;
  /// 3n/2 in lowest terms; only for the gcd(n,k) = 1, k >= 2 cases.
  std::optional<Rational> relaxed;
};

/// Upper bound on the double domination number of any signature on
/// I(n,j,k) (j = 1 for P(n,k)).
UpperBound upper_bound(std::size_t n, std::size_t j, std::size_t k);

}  // namespace sdd
