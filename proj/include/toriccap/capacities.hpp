#pragma once

#include <optional>
#include <vector>

#include "toriccap/lattice_program.hpp"
#include "toriccap/tangency.hpp"

namespace toriccap {

// Gutt-Hutchings capacity: min ||v||_omega over v in Z^n_{>=0} with sum v_i = k.
Rational gh_capacity(const RationalPolytope& omega, int k);
// Same formula over a vertex cloud in R^n, 2 <= n <= 4.
Rational gh_capacity(const VertexSet& omega, int k);

struct AsymptoticSlope {
  Rational slope;
  LatticeVector ray;
};

// lim l_k / k: min over positive-quadrant rays of the (unresolved) normal fan
// of ||v||_omega / (1 + v1 + v2).
AsymptoticSlope asymptotic_slope(const RationalPolytope& omega);

// The same ratio minimized over the lattice box {0..bound}^2 \ 0.
AsymptoticSlope asymptotic_slope_box(const RationalPolytope& omega, long bound);

// min(a, b).
Rational gromov_width(const RationalPolytope& omega);

struct RsftInterval {
  int k;
  Rational lower;
  std::optional<Rational> upper;  // only for lax constraints
  bool exact;                     // lax and a == b: lower is the capacity
  std::optional<Rational> stable_upper;  // single-point ((k0)): u_{k0+1}
  bool non_lax_warning;
};

RsftInterval rsft_interval(const RationalPolytope& omega, const TangencyConstraint& p);

struct CapacityReport {
  int k;
  Rational lk;
  Rational uk;
  Rational gh;
  CurveClass lk_witness;
  CurveClass uk_witness;
  bool exact;  // a(omega) == b(omega)
};

// Rows for k = 1..k_max from a single table build.
std::vector<CapacityReport> capacity_reports(const RationalPolytope& omega, int k_max);

}  // namespace toriccap
