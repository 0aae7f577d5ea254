#pragma once

#include <cstdint>
#include <vector>

#include "toriccap/toric.hpp"

namespace toriccap {

// Cost and anticanonical weight of the cocharacter class R_rho for a ray rho in
// the positive quadrant: cost = ||v_rho||_omega, weight = 1 + v1 + v2.
struct RayCost {
  LatticeVector ray;
  std::size_t fan_index;
  Rational cost;
  std::int64_t weight;
};

// Bottom-up covering table: for each target t, the cheapest multiplicity vector
// b over the positive rays with sum b_rho w_rho >= t. Ties are broken by
// smaller total weight, then by the lexicographically smaller b (rays in fan
// order).
struct DpTable {
  std::vector<Rational> cost;
  std::vector<std::int64_t> weight;
  std::vector<std::vector<std::int64_t>> witness;

  std::size_t max_target() const { return cost.size() - 1; }
};

struct CapacityValue {
  Rational value;
  CurveClass witness;
};

// Exact l_k / u_k on a strongly convex rational polytope via the movable-cone
// reduction: every movable class on the resolved surface is a nonnegative
// integer combination of the R_rho for positive-quadrant rays, so both bounds
// become unbounded covering knapsacks over those rays.
//
// The tables are filled once in the constructor for targets 0..k_max+1; the
// object is immutable afterwards and safe to query concurrently.
class FanLatticeProgram {
 public:
  FanLatticeProgram(const RationalPolytope& omega, int k_max);
  // Runs on a caller-supplied smooth, strongly convex refinement of the normal
  // fan of omega (e.g. the resolution followed by extra blowups).
  FanLatticeProgram(const RationalPolytope& omega, Fan2D smooth_fan, int k_max);

  const Fan2D& fan() const { return fan_; }
  const std::vector<RayCost>& positive_rays() const { return rays_; }
  int k_max() const { return k_max_; }

  CapacityValue lower(int k) const;
  CapacityValue upper(int k) const;

  // Unrestricted table (l_k = cost[k + 1]) and the table over classes that
  // are not fiber multiples.
  const DpTable& lower_table() const { return lower_; }
  const DpTable& upper_table() const { return upper_; }

  // Expands b into sum b_rho R_rho.
  CurveClass expand(const std::vector<std::int64_t>& b) const;

 private:
  void build();
  void check_k(int k) const;

  RationalPolytope omega_;
  Fan2D fan_;
  int k_max_;
  std::vector<RayCost> rays_;
  std::optional<std::size_t> e1_;  // position of e1 / e2 in rays_
  std::optional<std::size_t> e2_;
  DpTable lower_;
  DpTable upper_;
};

CapacityValue l_k(const RationalPolytope& omega, int k);
CapacityValue u_k(const RationalPolytope& omega, int k);

}  // namespace toriccap
