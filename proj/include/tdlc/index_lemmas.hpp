#pragma once

#include "tdlc/finite.hpp"

#include <map>

namespace tdlc::finite {

// ⋂_{x∈C} x⁻¹Kx
Elements normalized_core(const Group& g, const Elements& k, const Elements& c);

struct LemmaCounts {
  std::map<std::string, std::size_t> checked;  // identity name -> instances
  std::vector<std::string> failures;
  std::size_t total() const;
  bool ok() const { return failures.empty(); }
};

// Exhaustive check over all subgroup tuples of g and, for the identities
// involving a homomorphism, over all endomorphisms of g:
//   index-tower      [G:H] = [G:K][K:H]                      H ≤ K
//   product-index    [LH:H] = [L:H∩L]
//   meet-index       [K:H] ≥ [K∩L:H∩L]                       H ≤ K
//   join-index       [K:H] ≥ [KL:HL]                         H ≤ K, HL = LH
//   preimage-index   [φ⁻¹K:φ⁻¹H] = [K∩Im φ:H∩Im φ] ≤ [K:H]   H ≤ K
//   image-index      [K ker φ:H ker φ] = [φK:φH] ≤ [K:H]     H ≤ K
//   image-monotone   [φH:H] ≥ [φK:K]                         H ≤ K, H ≤ φH, K ≤ φK
//   snake            [B:B'] = [A:A∩B'][B:B'A]                A, B' ≤ B, B'A = AB'
//   normalized-core  L ≤ K and C normalizes L                 L = core of K under C
LemmaCounts check_index_identities(const Group& g);

}  // namespace tdlc::finite
