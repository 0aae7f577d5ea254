#pragma once

#include <cstdint>
#include <vector>

#include "toriccap/geometry.hpp"

namespace toriccap {

struct BruteForceOptions {
  // Restrict to U(k): either the single pair (e_j, -e_j), or sequences that
  // leave both span(e1) and span(e2). Planar only.
  bool restrict_to_u = false;
  std::uint64_t node_budget = 4'000'000'000ULL;
};

struct BruteForceResult {
  Rational value;
  std::vector<LatticeVector> sequence;  // an optimal zero-sum sequence
  std::uint64_t nodes = 0;
};

// Direct evaluation of
//   inf { sum_i ||v_i||_omega : v_1..v_m in Z^n \ 0, sum v_i = 0, m >= k+1 }
// by exhaustive multiset search. omega must lie in the closed positive orthant,
// contain the origin, and reach each positive coordinate axis (a_i > 0); this
// covers weakly convex domains. n in {2, 3}.
//
// The search is bounded by a feasible seed value B: every vector with a
// positive i-th coordinate c costs at least a_i * c, so the positive (and
// hence negative) coordinate mass along axis i is at most B / a_i.
// Throws kResourceExhausted when the node budget runs out.
BruteForceResult l_k_bruteforce(const VertexSet& omega, int k,
                                const BruteForceOptions& options = {});
BruteForceResult l_k_bruteforce(const RationalPolytope& omega, int k,
                                const BruteForceOptions& options = {});

}  // namespace toriccap
